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
#include <random>

namespace gmtrend {

/// Seeded generator used throughout. mt19937_64's output sequence is fixed by
/// the standard, so runs are reproducible across toolchains.
using Rng = std::mt19937_64;

/// Uniform on (0, 1): the top 53 bits of one draw, offset by half an ulp so
/// that zero is never returned.
inline double uniform_open01(Rng& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

/// Standard normal by Box-Muller: two uniforms per variate, cosine branch only.
double standard_normal(Rng& rng);

}  // namespace gmtrend
