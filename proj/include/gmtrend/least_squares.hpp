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

/// Local polynomial fit in the scaled basis (s - s_q)^r / r!, so theta row r
/// estimates the r-th derivative of the trend at the anchor.
struct PolyFit {
  double anchor_epoch = 0.0;
  int order = 0;
  Eigen::MatrixXd theta;  // (k+1) x m
};

/// Design matrix with entries offsets(i)^r / r!.
Eigen::MatrixXd scaled_design(const Eigen::VectorXd& offsets, int order);

/// Column-wise ordinary least squares (equal to GLS for this equal-degree
/// system) through one column-pivoted QR of the design.
PolyFit fit_local_poly(const SampleWindow& window, int order);

Eigen::RowVectorXd ls_forecast(const PolyFit& fit, double target_epoch);

ForecastSequence ls_forecast_all(const MultiSeries& series, const ForecastConfig& config);

}  // namespace gmtrend
