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

#include "gmtrend/psd.hpp"

#include <algorithm>
#include <cmath>

#include "gmtrend/error.hpp"

namespace gmtrend::psd {

using Eigen::Index;

namespace {

Eigen::MatrixXd symmetrized(const Eigen::MatrixXd& a) { return 0.5 * (a + a.transpose()); }

}  // namespace

bool is_symmetric(const Eigen::MatrixXd& a, double tol) {
  if (a.rows() != a.cols()) return false;
  if (a.size() == 0) return true;
  const double scale = a.cwiseAbs().maxCoeff();
  return (a - a.transpose()).cwiseAbs().maxCoeff() <= tol * scale;
}

void require_symmetric(const Eigen::MatrixXd& a, const char* what) {
  if (!is_symmetric(a)) {
    throw Error(ErrorCode::NotSymmetric, std::string(what) + " is not symmetric");
  }
}

bool is_psd(const Eigen::MatrixXd& a, double tol) {
  require_symmetric(a, "is_psd argument");
  if (a.size() == 0) return true;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(symmetrized(a), Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& d = eig.eigenvalues();  // ascending
  const double largest = std::max(std::abs(d(0)), std::abs(d(d.size() - 1)));
  return d(0) >= -tol * largest;
}

Eigen::MatrixXd nearest_pd(const Eigen::MatrixXd& a, const NearestPdOptions& options) {
  require_symmetric(a, "nearest_pd argument");
  const Index n = a.rows();
  Eigen::MatrixXd x = symmetrized(a);
  if (n == 0) return x;

  using Solver = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>;

  // Already comfortably PD: a fixed point of the projection.
  {
    Solver eig(x, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd& d = eig.eigenvalues();
    if (d(n - 1) > 0.0 && d(0) > options.posd_tol * d(n - 1)) return x;
  }

  // Dykstra-corrected projection onto the PSD cone. Without a diagonal
  // constraint the symmetric-space step is the identity, so each iteration
  // is a single spectral clip of the corrected iterate.
  Eigen::MatrixXd correction = Eigen::MatrixXd::Zero(n, n);
  bool converged = false;
  for (int iter = 0; iter < options.max_iterations && !converged; ++iter) {
    const Eigen::MatrixXd previous = x;
    const Eigen::MatrixXd corrected = previous - correction;
    Solver eig(corrected);
    const Eigen::VectorXd& d = eig.eigenvalues();
    const Eigen::MatrixXd& v = eig.eigenvectors();
    const double top = d(n - 1);
    if (!(top > 0.0)) {
      throw Error(ErrorCode::NoConvergence, "matrix is negative semi-definite");
    }
    x.setZero();
    for (Index i = 0; i < n; ++i) {
      if (d(i) > options.eig_tol * top) {
        x.noalias() += d(i) * v.col(i) * v.col(i).transpose();
      }
    }
    correction = x - corrected;
    const double denom = previous.norm();
    const double change = denom > 0.0 ? (previous - x).norm() / denom : 0.0;
    converged = change <= options.conv_tol;
  }
  if (!converged) {
    throw Error(ErrorCode::NoConvergence, "alternating projections did not converge in " +
                                              std::to_string(options.max_iterations) +
                                              " iterations");
  }

  // Floor the spectrum at posd_tol * lambda_max, then rescale so the diagonal
  // stays that of the projected matrix.
  Solver eig(x);
  Eigen::VectorXd d = eig.eigenvalues();
  const double floor = options.posd_tol * std::abs(d(n - 1));
  if (d(0) < floor) {
    const Eigen::VectorXd diag_before = x.diagonal();
    d = d.cwiseMax(floor);
    const Eigen::MatrixXd& v = eig.eigenvectors();
    x = v * d.asDiagonal() * v.transpose();
    const Eigen::VectorXd scale =
        (diag_before.cwiseMax(floor).array() / x.diagonal().array()).sqrt();
    x = scale.asDiagonal() * x * scale.asDiagonal();
  }
  return symmetrized(x);
}

Eigen::MatrixXd pseudo_inverse(const Eigen::MatrixXd& a, double rank_tol) {
  require_symmetric(a, "pseudo_inverse argument");
  const Index n = a.rows();
  if (n == 0) return a;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(symmetrized(a));
  const Eigen::VectorXd& d = eig.eigenvalues();
  const Eigen::MatrixXd& v = eig.eigenvectors();
  const double largest = d.cwiseAbs().maxCoeff();
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(n);
  for (Index i = 0; i < n; ++i) {
    if (d(i) > rank_tol * largest) inv(i) = 1.0 / d(i);
  }
  return symmetrized(v * inv.asDiagonal() * v.transpose());
}

}  // namespace gmtrend::psd
