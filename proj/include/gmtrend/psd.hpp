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

namespace gmtrend::psd {

inline constexpr double kSymmetryTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kRankTol = 1e-10;

/// Defaults of the nearest-PD projection (R's Matrix::nearPD).
struct NearestPdOptions {
  double eig_tol = 1e-6;
  double conv_tol = 1e-7;
  double posd_tol = 1e-8;
  int max_iterations = 100;
};

/// Symmetric within `tol` relative to the largest absolute entry.
bool is_symmetric(const Eigen::MatrixXd& a, double tol = kSymmetryTol);

/// Throws NotSymmetric unless `a` is square and symmetric within kSymmetryTol.
void require_symmetric(const Eigen::MatrixXd& a, const char* what);

/// Smallest eigenvalue >= -tol * (largest absolute eigenvalue).
bool is_psd(const Eigen::MatrixXd& a, double tol = kPsdTol);

/// Higham-style alternating projections with Dykstra's correction onto the
/// PSD cone, followed by an eigenvalue floor at posd_tol * lambda_max so the
/// result is strictly positive definite.
Eigen::MatrixXd nearest_pd(const Eigen::MatrixXd& a, const NearestPdOptions& options = {});

/// Moore-Penrose inverse of a symmetric PSD matrix from its eigendecomposition;
/// eigenvalues at or below rank_tol * lambda_max are treated as zero.
Eigen::MatrixXd pseudo_inverse(const Eigen::MatrixXd& a, double rank_tol = kRankTol);

}  // namespace gmtrend::psd
