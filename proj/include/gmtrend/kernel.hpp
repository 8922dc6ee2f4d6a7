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

#include "gmtrend/random.hpp"
#include "gmtrend/series.hpp"

namespace gmtrend {

/// Parameter pair (alpha, beta) of the stationary-increment Gauss-Markov
/// kernel Gamma(t, s) = min(t,s) * (alpha - beta * max(t,s)).
///
/// Both matrices are symmetrized on construction. alpha must be positive
/// definite; beta may be indefinite, as fitted estimates often are.
class KernelParams {
 public:
  KernelParams(Eigen::MatrixXd alpha, Eigen::MatrixXd beta);

  const Eigen::MatrixXd& alpha() const { return alpha_; }
  const Eigen::MatrixXd& beta() const { return beta_; }
  Index dim() const { return alpha_.rows(); }

 private:
  Eigen::MatrixXd alpha_;
  Eigen::MatrixXd beta_;
};

Eigen::MatrixXd kernel_eval(const KernelParams& params, double t, double s);

/// Unchecked kernel evaluation on raw (possibly fitted, possibly singular)
/// matrices. Throws NegativeTime only.
Eigen::MatrixXd kernel_eval(const Eigen::MatrixXd& alpha, const Eigen::MatrixXd& beta,
                            double t, double s);

/// sup{t > 0 : alpha - beta t is PD}; +infinity when beta has no positive
/// generalized eigenvalue with respect to alpha.
double validity_horizon(const KernelParams& params);

/// A simulated trajectory. X(0) = 0 is implied and not stored.
struct SamplePath {
  Eigen::VectorXd epochs;
  Eigen::MatrixXd values;  // one row per epoch

  MultiSeries to_series() const;
};

/// Draws X at the given epochs through the Markov transitions
/// X(t_{i+1}) = A X(t_i) + xi, A = Gamma(t_{i+1}, t_i) Gamma(t_i, t_i)^{-1}.
SamplePath simulate_path(const KernelParams& params, const Eigen::VectorXd& epochs, Rng& rng);

}  // namespace gmtrend
