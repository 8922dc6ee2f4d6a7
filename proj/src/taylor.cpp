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

#include "gmtrend/taylor.hpp"

#include <string>

#include "gmtrend/conditional.hpp"
#include "gmtrend/error.hpp"
#include "gmtrend/estimation.hpp"

namespace gmtrend {

namespace {

DerivativeSeries build_level(const Eigen::VectorXd& epochs, const Eigen::MatrixXd& prev,
                             int level, const ForecastConfig& config) {
  const Index count = prev.rows();
  validate_config(config, count);
  const Index n = config.window;
  const Index p = config.horizon;

  DerivativeSeries out;
  out.level = level;
  out.values = Eigen::MatrixXd::Zero(count, prev.cols());
  out.first_valid = n + 1;
  out.last_valid = count - p;
  for (Index i = out.first_valid; i <= out.last_valid; ++i) {
    const SampleWindow window = extract_window(epochs, prev, i, n);
    out.values.row(i - 1) = slope_estimate(window, epochs(i + p - 1));
  }
  return out;
}

}  // namespace

Eigen::RowVectorXd slope_estimate(const SampleWindow& window, double target_epoch) {
  const Index n = window.increments();
  if (n < 2) {
    throw Error(ErrorCode::TooFewIncrements, "slope estimate needs n >= 2");
  }
  const double s_first = window.epochs(0);
  const double s_last = window.epochs(n);
  if (!(target_epoch > s_last)) {
    throw Error(ErrorCode::BadTimes, "target epoch must follow the window");
  }

  const IncrementWindow inc = to_increments(window);
  const Eigen::MatrixXd alpha_hat = estimate_alpha(inc);
  const double t_n = inc.last_time();
  const Eigen::VectorXd x_n = inc.last_increment();
  const Eigen::MatrixXd beta_hat = estimate_beta(alpha_hat, t_n, x_n);
  const ConditionalSystem sys = build_joint(alpha_hat, beta_hat, t_n, target_epoch - s_first);

  const Eigen::RowVectorXd level_at_target =
      window.values.row(0) + conditional_mean(sys, x_n).transpose();
  return (level_at_target - window.values.row(n)) / (target_epoch - s_last);
}

DerivativeSeries build_derivative_series(const MultiSeries& series, const ForecastConfig& config) {
  return build_level(series.epochs(), series.samples(), 1, config);
}

DerivativeSeries build_derivative_series(const MultiSeries& series, const DerivativeSeries& prev,
                                         const ForecastConfig& config) {
  if (prev.values.rows() != series.size() || prev.values.cols() != series.dim()) {
    throw Error(ErrorCode::ShapeMismatch, "derivative series does not match the base series");
  }
  return build_level(series.epochs(), prev.values, prev.level + 1, config);
}

GaussMarkovForecaster::GaussMarkovForecaster(MultiSeries series, ForecastConfig config)
    : series_(std::move(series)), config_(config) {
  validate_config(config_, series_.size());
  levels_.reserve(static_cast<std::size_t>(config_.order));
  for (int r = 1; r <= config_.order; ++r) {
    levels_.push_back(r == 1 ? build_derivative_series(series_, config_)
                             : build_derivative_series(series_, levels_.back(), config_));
  }
}

const DerivativeSeries& GaussMarkovForecaster::level(int r) const {
  if (r < 1 || r > config_.order) {
    throw Error(ErrorCode::IndexOutOfRange, "derivative level " + std::to_string(r));
  }
  return levels_[static_cast<std::size_t>(r - 1)];
}

void GaussMarkovForecaster::check_anchor(Index q) const {
  const Index first = config_.window + 1;
  const Index last = series_.size() - config_.horizon;
  if (q < first || q > last) {
    throw Error(ErrorCode::IndexOutOfRange, "anchor " + std::to_string(q) + " outside " +
                                                std::to_string(first) + ".." +
                                                std::to_string(last));
  }
}

TaylorCoefficients GaussMarkovForecaster::coefficients(Index q) const {
  check_anchor(q);
  TaylorCoefficients tc;
  tc.anchor = q;
  tc.anchor_epoch = series_.epoch(q);
  tc.coeffs.reserve(levels_.size() + 1);
  tc.coeffs.push_back(series_.samples().row(q - 1));
  for (const DerivativeSeries& level : levels_) {
    tc.coeffs.push_back(level.values.row(q - 1));
  }
  return tc;
}

Eigen::RowVectorXd GaussMarkovForecaster::forecast(Index q, int order) const {
  if (order < 0 || order > config_.order) {
    throw Error(ErrorCode::InvalidConfig, "order " + std::to_string(order) +
                                              " exceeds the fitted order " +
                                              std::to_string(config_.order));
  }
  check_anchor(q);
  const double step = series_.epoch(q + config_.horizon) - series_.epoch(q);
  Eigen::RowVectorXd sum = series_.samples().row(q - 1);
  double factor = 1.0;  // step^r / r!
  for (int r = 1; r <= order; ++r) {
    factor *= step / r;
    sum += levels_[static_cast<std::size_t>(r - 1)].values.row(q - 1) * factor;
  }
  return sum;
}

ForecastSequence GaussMarkovForecaster::forecast_all(int order) const {
  ForecastConfig cfg = config_;
  cfg.order = order;
  const AnchorRange range = anchor_range(cfg, series_.size());
  ForecastSequence out;
  out.reserve(static_cast<std::size_t>(range.count()));
  for (Index q = range.first; q <= range.last; ++q) {
    out.push_back({q, forecast(q, order)});
  }
  return out;
}

TaylorCoefficients taylor_coefficients(const MultiSeries& series, Index q,
                                       const ForecastConfig& config) {
  return GaussMarkovForecaster(series, config).coefficients(q);
}

Eigen::RowVectorXd gm_forecast(const MultiSeries& series, Index q, const ForecastConfig& config) {
  return GaussMarkovForecaster(series, config).forecast(q);
}

ForecastSequence gm_forecast_all(const MultiSeries& series, const ForecastConfig& config) {
  return GaussMarkovForecaster(series, config).forecast_all();
}

}  // namespace gmtrend
