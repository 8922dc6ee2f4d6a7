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
#include <iosfwd>
#include <vector>

#include "gmtrend/datagen.hpp"
#include "gmtrend/series.hpp"

namespace gmtrend::experiments {

// Reference experiment constants.
inline constexpr Index kSamples = 4000;
inline constexpr int kHorizon = 100;
inline constexpr int kSeriesCount = 10;
inline constexpr double kPeriod = 1000.0;
inline constexpr double kNoiseStd = 0.125;
inline constexpr int kWindows[] = {10, 50, 200};
inline constexpr int kOrders[] = {1, 2, 3};

/// Noise-free (table 1) or common-noise (table 2) sinusoids.
MultiSeries reference_data(bool noisy, std::uint64_t seed, int m = kSeriesCount);

struct TableCell {
  int window = 0;
  int order = 0;
  Method method = Method::LeastSquares;
  double mase1 = 0.0;
};

struct TableResult {
  int table = 0;
  std::uint64_t seed = 0;
  std::vector<TableCell> cells;

  double at(int window, int order, Method method) const;
};

/// Runs the full (n, k, method) grid of MASE_1 values. Table 1 ignores the
/// seed.
TableResult reproduce_table(int table, std::uint64_t seed);

/// Grid with LS and GM columns interleaved by order, one row per window.
void print_table(std::ostream& out, const TableResult& result);

struct FigureRow {
  Index anchor = 0;
  double target_epoch = 0.0;
  double forecast = 0.0;
  double sample = 0.0;
  double trend = 0.0;
};

struct FigureResult {
  int figure = 0;
  std::uint64_t seed = 0;
  ForecastConfig config;
  int series_count = 0;
  bool noisy = false;
  double mase1 = 0.0;
  std::vector<FigureRow> rows;
};

/// Figure 1: k=3, n=10, m=10 noise-free. Figure 3: k=1, n=50, series 1 only.
/// Figure 4: k=1, n=50, m=10. Figure 5: k=5, n=50, m=10. Noisy figures use
/// common noise. All Gauss-Markov with p=100.
FigureResult reproduce_figure(int figure, std::uint64_t seed);

}  // namespace gmtrend::experiments
