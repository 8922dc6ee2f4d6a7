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

#include <cstdint>

#include <Eigen/Dense>

#include "gmtrend/series.hpp"

namespace gmtrend {

/// Phase-shifted sinusoids w_j(t) = amplitude * sin(2 pi t / period + phi_j),
/// phi_j = 2 pi (j-1) / m.
struct TrendSpec {
  int m = 10;
  double period = 1000.0;
  double amplitude = 1.0;
};

enum class NoiseMode {
  None,
  Common,       // one draw per epoch shared by every column
  Independent,  // one draw per entry; not part of the reference experiments
};

const char* noise_mode_name(NoiseMode mode) noexcept;
NoiseMode parse_noise_mode(std::string_view name);

struct NoiseSpec {
  NoiseMode mode = NoiseMode::None;
  double std = 0.125;
  std::uint64_t seed = 42;
};

/// Epochs 1..N and samples w_j(i) plus noise.
MultiSeries generate(const TrendSpec& trend, const NoiseSpec& noise, Index count);

/// r-th derivative of every w_j at t.
Eigen::RowVectorXd true_trend(const TrendSpec& trend, double t, int derivative);

}  // namespace gmtrend
