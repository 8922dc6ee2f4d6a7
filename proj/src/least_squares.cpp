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

#include "gmtrend/least_squares.hpp"

#include <string>

#include "gmtrend/error.hpp"

namespace gmtrend {

Eigen::MatrixXd scaled_design(const Eigen::VectorXd& offsets, int order) {
  Eigen::MatrixXd design(offsets.size(), order + 1);
  design.col(0).setOnes();
  for (int r = 1; r <= order; ++r) {
    design.col(r) = design.col(r - 1).cwiseProduct(offsets) / static_cast<double>(r);
  }
  return design;
}

PolyFit fit_local_poly(const SampleWindow& window, int order) {
  if (order < 0) {
    throw Error(ErrorCode::InvalidConfig, "polynomial order must be >= 0");
  }
  const Index rows = window.epochs.size();
  if (rows < order + 1) {
    throw Error(ErrorCode::Underdetermined, std::to_string(rows) + " samples cannot fit " +
                                                std::to_string(order + 1) + " coefficients");
  }
  const double anchor_epoch = window.epochs(rows - 1);
  const Eigen::VectorXd offsets = window.epochs.array() - anchor_epoch;
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(scaled_design(offsets, order));
  if (qr.rank() < order + 1) {
    throw Error(ErrorCode::RankDeficientDesign,
                "design of order " + std::to_string(order) + " has numerical rank " +
                    std::to_string(qr.rank()));
  }

  PolyFit fit;
  fit.anchor_epoch = anchor_epoch;
  fit.order = order;
  fit.theta.resize(order + 1, window.values.cols());
  // One column at a time, so a multi-column fit is bit-identical to fitting
  // each series on its own.
  for (Index j = 0; j < window.values.cols(); ++j) {
    const Eigen::VectorXd column = window.values.col(j);
    fit.theta.col(j) = qr.solve(column);
  }
  return fit;
}

Eigen::RowVectorXd ls_forecast(const PolyFit& fit, double target_epoch) {
  const double offset = target_epoch - fit.anchor_epoch;
  Eigen::RowVectorXd sum = fit.theta.row(0);
  double factor = 1.0;  // offset^r / r!
  for (int r = 1; r <= fit.order; ++r) {
    factor *= offset / r;
    sum += fit.theta.row(r) * factor;
  }
  return sum;
}

ForecastSequence ls_forecast_all(const MultiSeries& series, const ForecastConfig& config) {
  ForecastConfig cfg = config;
  cfg.method = Method::LeastSquares;
  const AnchorRange range = anchor_range(cfg, series.size());
  ForecastSequence out;
  out.reserve(static_cast<std::size_t>(range.count()));
  for (Index q = range.first; q <= range.last; ++q) {
    const PolyFit fit = fit_local_poly(extract_window(series, q, cfg.window), cfg.order);
    out.push_back({q, ls_forecast(fit, series.epoch(q + cfg.horizon))});
  }
  return out;
}

}  // namespace gmtrend
