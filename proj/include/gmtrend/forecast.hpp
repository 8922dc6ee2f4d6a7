/*
 * Copyright 2026 The gmtrend Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 */

#pragma once

#include <vector>

#include <Eigen/Dense>

#include "gmtrend/series.hpp"

namespace gmtrend {

/// Forecast of y_{q+p} made at anchor q (1-based).
struct AnchoredForecast {
  Index anchor = 0;
  Eigen::RowVectorXd value;
};

using ForecastSequence = std::vector<AnchoredForecast>;

/// Dispatches on config.method over anchor_range(config, N).
ForecastSequence forecast_all(const MultiSeries& series, const ForecastConfig& config);

}  // namespace gmtrend
