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

#include "gmtrend/conditional.hpp"

#include "gmtrend/error.hpp"
#include "gmtrend/kernel.hpp"
#include "gmtrend/psd.hpp"

namespace gmtrend {

namespace {

Eigen::MatrixXd assemble(const Eigen::MatrixXd& b11, const Eigen::MatrixXd& b12,
                         const Eigen::MatrixXd& b21, const Eigen::MatrixXd& b22) {
  const Index m = b11.rows();
  Eigen::MatrixXd out(2 * m, 2 * m);
  out << b11, b12, b21, b22;
  return out;
}

}  // namespace

Eigen::MatrixXd ConditionalSystem::joint() const { return assemble(m11, m12, m21, m22); }

Eigen::MatrixXd ConditionalSystem::repaired_joint() const {
  return assemble(rm11, rm12, rm21, rm22);
}

ConditionalSystem build_joint(const Eigen::MatrixXd& alpha_hat, const Eigen::MatrixXd& beta_hat,
                              double t_n, double t_target) {
  if (!(t_n > 0.0) || !(t_target >= t_n)) {
    throw Error(ErrorCode::BadTimes, "need 0 < t_n <= t_target");
  }
  if (alpha_hat.rows() != alpha_hat.cols() || beta_hat.rows() != alpha_hat.rows() ||
      beta_hat.cols() != alpha_hat.cols()) {
    throw Error(ErrorCode::ShapeMismatch, "alpha_hat and beta_hat must be square and equal-sized");
  }
  const Index m = alpha_hat.rows();

  ConditionalSystem sys;
  sys.t_n = t_n;
  sys.t_target = t_target;
  sys.m11 = kernel_eval(alpha_hat, beta_hat, t_target, t_target);
  sys.m12 = kernel_eval(alpha_hat, beta_hat, t_target, t_n);
  sys.m21 = sys.m12;
  sys.m22 = kernel_eval(alpha_hat, beta_hat, t_n, t_n);

  const Eigen::MatrixXd joint = sys.joint();
  if (psd::is_psd(joint)) {
    sys.repaired = false;
    sys.rm11 = sys.m11;
    sys.rm12 = sys.m12;
    sys.rm21 = sys.m21;
    sys.rm22 = sys.m22;
  } else {
    const Eigen::MatrixXd fixed = psd::nearest_pd(joint);
    sys.repaired = true;
    sys.rm11 = fixed.topLeftCorner(m, m);
    sys.rm12 = fixed.topRightCorner(m, m);
    sys.rm21 = fixed.bottomLeftCorner(m, m);
    sys.rm22 = fixed.bottomRightCorner(m, m);
  }
  return sys;
}

Eigen::VectorXd conditional_mean(const ConditionalSystem& sys, const Eigen::VectorXd& x_n) {
  if (x_n.size() != sys.dim()) {
    throw Error(ErrorCode::ShapeMismatch, "x_n does not match the conditional system");
  }
  return sys.rm12 * (psd::pseudo_inverse(sys.rm22) * x_n);
}

Eigen::MatrixXd conditional_covariance(const ConditionalSystem& sys) {
  const Eigen::MatrixXd cov = sys.rm11 - sys.rm12 * psd::pseudo_inverse(sys.rm22) * sys.rm21;
  return 0.5 * (cov + cov.transpose());
}

Eigen::VectorXd linear_mean_closed_form(const Eigen::MatrixXd& alpha_hat, double t_n,
                                        const Eigen::VectorXd& x_n, double t) {
  if (!(t_n > 0.0)) {
    throw Error(ErrorCode::BadTimes, "t_n must be positive");
  }
  const double norm2 = x_n.squaredNorm();
  if (norm2 == 0.0) {
    throw Error(ErrorCode::ZeroEndpoint, "x_n = 0 leaves the closed form undefined");
  }
  return x_n + (x_n / t_n - (alpha_hat * x_n) / norm2) * (t - t_n);
}

}  // namespace gmtrend
