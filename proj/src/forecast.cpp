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

#include "gmtrend/forecast.hpp"

#include "gmtrend/least_squares.hpp"
#include "gmtrend/metrics.hpp"
#include "gmtrend/taylor.hpp"

namespace gmtrend {

ForecastSequence forecast_all(const MultiSeries& series, const ForecastConfig& config) {
  switch (config.method) {
    case Method::GaussMarkov: return gm_forecast_all(series, config);
    case Method::LeastSquares: return ls_forecast_all(series, config);
    case Method::Naive: return naive_forecast_all(series, config);
  }
  return {};
}

}  // namespace gmtrend
