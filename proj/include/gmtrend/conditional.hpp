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

#include "gmtrend/series.hpp"

namespace gmtrend {

/// Joint covariance of (X(t_target), X(t_n)) under the fitted kernel, split
/// into m x m blocks, together with its repaired counterpart. When the joint
/// matrix is already PSD the r-blocks are copies of the raw blocks.
struct ConditionalSystem {
  Eigen::MatrixXd m11, m12, m21, m22;
  bool repaired = false;
  Eigen::MatrixXd rm11, rm12, rm21, rm22;
  double t_n = 0.0;
  double t_target = 0.0;

  Index dim() const { return m11.rows(); }
  Eigen::MatrixXd joint() const;
  Eigen::MatrixXd repaired_joint() const;
};

ConditionalSystem build_joint(const Eigen::MatrixXd& alpha_hat, const Eigen::MatrixXd& beta_hat,
                              double t_n, double t_target);

/// rm12 * pinv(rm22) * x_n
Eigen::VectorXd conditional_mean(const ConditionalSystem& sys, const Eigen::VectorXd& x_n);

/// rm11 - rm12 * pinv(rm22) * rm21, symmetrized
Eigen::MatrixXd conditional_covariance(const ConditionalSystem& sys);

/// x_n + (x_n / t_n - alpha_hat x_n / (x_n^T x_n)) (t - t_n)
///
/// The linear conditional mean of the fitted process. Agrees with
/// conditional_mean whenever no repair was needed; throws ZeroEndpoint for
/// x_n = 0.
Eigen::VectorXd linear_mean_closed_form(const Eigen::MatrixXd& alpha_hat, double t_n,
                                        const Eigen::VectorXd& x_n, double t);

}  // namespace gmtrend
