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

#include "gmtrend/forecast.hpp"
#include "gmtrend/series.hpp"

namespace gmtrend {

/// Gauss-Markov slope of a window towards `target_epoch`:
/// (lambda0(target) - y_q) / (target - s_q), where lambda0(target) is
/// y_{q-n} plus the (repaired if necessary) conditional mean of the fitted
/// process at the target time.
Eigen::RowVectorXd slope_estimate(const SampleWindow& window, double target_epoch);

/// Level-r slope estimates y^(r). Rows outside [first_valid, last_valid]
/// are exactly zero and are read as zeros by the next level.
struct DerivativeSeries {
  int level = 0;
  Eigen::MatrixXd values;
  Index first_valid = 0;
  Index last_valid = -1;
};

/// Level 1 from the raw samples.
DerivativeSeries build_derivative_series(const MultiSeries& series, const ForecastConfig& config);

/// Level r from level r-1.
DerivativeSeries build_derivative_series(const MultiSeries& series, const DerivativeSeries& prev,
                                         const ForecastConfig& config);

/// lambda^(0) ... lambda^(k) at anchor q; coeffs[0] is y_q.
struct TaylorCoefficients {
  Index anchor = 0;
  double anchor_epoch = 0.0;
  std::vector<Eigen::RowVectorXd> coeffs;
};

/// Owns the derivative series of one (series, config) pair so that every
/// anchor reuses them. Forecasts of any order up to config.order can be
/// assembled from the same instance.
class GaussMarkovForecaster {
 public:
  GaussMarkovForecaster(MultiSeries series, ForecastConfig config);

  const ForecastConfig& config() const { return config_; }
  const MultiSeries& series() const { return series_; }
  const DerivativeSeries& level(int r) const;

  TaylorCoefficients coefficients(Index q) const;
  Eigen::RowVectorXd forecast(Index q) const { return forecast(q, config_.order); }
  Eigen::RowVectorXd forecast(Index q, int order) const;
  ForecastSequence forecast_all() const { return forecast_all(config_.order); }
  ForecastSequence forecast_all(int order) const;

 private:
  void check_anchor(Index q) const;

  MultiSeries series_;
  ForecastConfig config_;
  std::vector<DerivativeSeries> levels_;  // levels_[r-1] holds y^(r)
};

TaylorCoefficients taylor_coefficients(const MultiSeries& series, Index q,
                                       const ForecastConfig& config);

Eigen::RowVectorXd gm_forecast(const MultiSeries& series, Index q, const ForecastConfig& config);

ForecastSequence gm_forecast_all(const MultiSeries& series, const ForecastConfig& config);

}  // namespace gmtrend
