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

/// Closed-form maximum-likelihood estimate of alpha from one increment
/// window:
///
///   alpha_hat = 1/(n-1) sum_{i<n} v_i v_i^T / (t_i t_{i+1} (t_{i+1} - t_i)),
///   v_i = t_{i+1} x_i - t_i x_{i+1}.
///
/// Symmetric PSD by construction; singular for noise-free linear data.
Eigen::MatrixXd estimate_alpha(const IncrementWindow& increments);

/// beta_hat = alpha_hat / t_n - x_n x_n^T / t_n^2. Generally indefinite.
Eigen::MatrixXd estimate_beta(const Eigen::MatrixXd& alpha_hat, double t_n,
                              const Eigen::VectorXd& x_n);

}  // namespace gmtrend
