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

#include "gmtrend/estimation.hpp"

#include "gmtrend/error.hpp"
#include "gmtrend/psd.hpp"

namespace gmtrend {

Eigen::MatrixXd estimate_alpha(const IncrementWindow& inc) {
  const Index n = inc.count();
  if (n < 2) {
    throw Error(ErrorCode::TooFewIncrements, "alpha needs at least two increments");
  }
  const Index m = inc.dim();
  Eigen::MatrixXd alpha = Eigen::MatrixXd::Zero(m, m);
  Eigen::VectorXd v(m);
  for (Index i = 0; i + 1 < n; ++i) {
    const double t0 = inc.times(i);
    const double t1 = inc.times(i + 1);
    v = t1 * inc.increments.col(i) - t0 * inc.increments.col(i + 1);
    alpha.noalias() += (v * v.transpose()) / (t0 * t1 * (t1 - t0));
  }
  alpha /= static_cast<double>(n - 1);
  return 0.5 * (alpha + alpha.transpose());
}

Eigen::MatrixXd estimate_beta(const Eigen::MatrixXd& alpha_hat, double t_n,
                              const Eigen::VectorXd& x_n) {
  if (!(t_n > 0.0)) {
    throw Error(ErrorCode::NonPositiveTime, "t_n must be positive");
  }
  psd::require_symmetric(alpha_hat, "alpha_hat");
  if (x_n.size() != alpha_hat.rows()) {
    throw Error(ErrorCode::ShapeMismatch, "x_n does not match alpha_hat");
  }
  Eigen::MatrixXd beta = alpha_hat / t_n - (x_n * x_n.transpose()) / (t_n * t_n);
  return 0.5 * (beta + beta.transpose());
}

}  // namespace gmtrend
