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

#include "gmtrend/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gmtrend/error.hpp"
#include "gmtrend/psd.hpp"

namespace gmtrend {

namespace {

constexpr double kPdTol = 1e-10;

bool is_pd(const Eigen::MatrixXd& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(a, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& d = eig.eigenvalues();
  const double largest = d.cwiseAbs().maxCoeff();
  return largest > 0.0 && d(0) > kPdTol * largest;
}

// Symmetric square root of a covariance; negative rounding noise is clipped.
Eigen::MatrixXd covariance_root(const Eigen::MatrixXd& cov) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(0.5 * (cov + cov.transpose()));
  const Eigen::VectorXd root = eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return eig.eigenvectors() * root.asDiagonal() * eig.eigenvectors().transpose();
}

Eigen::VectorXd normal_vector(Index m, Rng& rng) {
  Eigen::VectorXd z(m);
  for (Index j = 0; j < m; ++j) z(j) = standard_normal(rng);
  return z;
}

}  // namespace

KernelParams::KernelParams(Eigen::MatrixXd alpha, Eigen::MatrixXd beta) {
  if (alpha.rows() != alpha.cols() || beta.rows() != beta.cols() ||
      alpha.rows() != beta.rows() || alpha.rows() == 0) {
    throw Error(ErrorCode::ShapeMismatch, "alpha and beta must be square and of equal size");
  }
  psd::require_symmetric(alpha, "alpha");
  psd::require_symmetric(beta, "beta");
  alpha_ = 0.5 * (alpha + alpha.transpose());
  beta_ = 0.5 * (beta + beta.transpose());
  if (!is_pd(alpha_)) {
    throw Error(ErrorCode::AlphaNotPD, "alpha must be positive definite");
  }
}

Eigen::MatrixXd kernel_eval(const Eigen::MatrixXd& alpha, const Eigen::MatrixXd& beta, double t,
                            double s) {
  if (t < 0.0 || s < 0.0) {
    throw Error(ErrorCode::NegativeTime, "kernel times must be non-negative");
  }
  const double lo = std::min(t, s);
  const double hi = std::max(t, s);
  return lo * (alpha - beta * hi);
}

Eigen::MatrixXd kernel_eval(const KernelParams& params, double t, double s) {
  return kernel_eval(params.alpha(), params.beta(), t, s);
}

double validity_horizon(const KernelParams& params) {
  // Eigenvalues of beta v = lambda alpha v, i.e. of alpha^{-1/2} beta alpha^{-1/2}.
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> eig(params.beta(), params.alpha(),
                                                                Eigen::EigenvaluesOnly);
  const double top = eig.eigenvalues().maxCoeff();
  if (!(top > 0.0)) return std::numeric_limits<double>::infinity();
  return 1.0 / top;
}

MultiSeries SamplePath::to_series() const { return validate_series(epochs, values); }

SamplePath simulate_path(const KernelParams& params, const Eigen::VectorXd& epochs, Rng& rng) {
  const Index m = params.dim();
  const Index count = epochs.size();
  SamplePath path{epochs, Eigen::MatrixXd(count, m)};
  if (count == 0) return path;

  const double horizon = validity_horizon(params);
  for (Index i = 0; i < count; ++i) {
    if (!(epochs(i) > 0.0)) {
      throw Error(ErrorCode::NonPositiveTime, "simulation epochs must be positive");
    }
    if (i > 0 && !(epochs(i) > epochs(i - 1))) {
      throw Error(ErrorCode::NonIncreasingEpochs, "simulation epochs must increase");
    }
    if (epochs(i) >= horizon) {
      throw Error(ErrorCode::EpochBeyondHorizon,
                  "epoch " + std::to_string(epochs(i)) + " is not below the validity horizon " +
                      std::to_string(horizon));
    }
  }

  Eigen::VectorXd x = covariance_root(kernel_eval(params, epochs(0), epochs(0))) *
                      normal_vector(m, rng);
  path.values.row(0) = x.transpose();
  for (Index i = 1; i < count; ++i) {
    const double prev = epochs(i - 1);
    const double next = epochs(i);
    const Eigen::MatrixXd g_prev = kernel_eval(params, prev, prev);
    const Eigen::MatrixXd g_cross = kernel_eval(params, prev, next);  // symmetric
    // A = Gamma(next, prev) Gamma(prev, prev)^{-1}; both factors symmetric.
    const Eigen::MatrixXd gain = g_prev.ldlt().solve(g_cross).transpose();
    const Eigen::MatrixXd innovation = kernel_eval(params, next, next) - gain * g_cross;
    x = gain * x + covariance_root(innovation) * normal_vector(m, rng);
    path.values.row(i) = x.transpose();
  }
  return path;
}

}  // namespace gmtrend
