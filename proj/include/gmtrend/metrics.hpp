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

#include <Eigen/Dense>

#include "gmtrend/forecast.hpp"
#include "gmtrend/series.hpp"

namespace gmtrend {

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x);
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

Eigen::RowVectorXd naive_forecast(const MultiSeries& series, Index q);

ForecastSequence naive_forecast_all(const MultiSeries& series, const ForecastConfig& config);

struct MaseReport {
  Eigen::VectorXd values;  // MASE_j, j = 1..m
  Index anchor_count = 0;
  ForecastConfig config;
  bool skipped_warmup = false;
};

/// Mean absolute scaled error against the naive forecast over the same
/// anchors. With skip_warmup a full-range forecast sequence is accepted and
/// restricted; any other anchor set must match anchor_range exactly.
MaseReport mase(const ForecastSequence& forecasts, const MultiSeries& series,
                const ForecastConfig& config);

}  // namespace gmtrend
