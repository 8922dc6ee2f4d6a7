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

#include "gmtrend/datagen.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gmtrend/error.hpp"
#include "gmtrend/random.hpp"

namespace gmtrend {

namespace {

constexpr double kPi = std::numbers::pi;

void check_trend(const TrendSpec& trend) {
  if (trend.m < 1) throw Error(ErrorCode::InvalidConfig, "trend needs m >= 1");
  if (!(trend.period > 0.0)) throw Error(ErrorCode::InvalidConfig, "period must be positive");
}

double phase(const TrendSpec& trend, Index j) {
  return 2.0 * kPi * static_cast<double>(j) / static_cast<double>(trend.m);
}

}  // namespace

const char* noise_mode_name(NoiseMode mode) noexcept {
  switch (mode) {
    case NoiseMode::None: return "none";
    case NoiseMode::Common: return "common";
    case NoiseMode::Independent: return "independent";
  }
  return "unknown";
}

NoiseMode parse_noise_mode(std::string_view name) {
  if (name == "none") return NoiseMode::None;
  if (name == "common") return NoiseMode::Common;
  if (name == "independent") return NoiseMode::Independent;
  throw Error(ErrorCode::InvalidConfig, "unknown noise mode '" + std::string(name) + "'");
}

MultiSeries generate(const TrendSpec& trend, const NoiseSpec& noise, Index count) {
  if (count < 2) {
    throw Error(ErrorCode::BadCount, "need at least 2 samples, got " + std::to_string(count));
  }
  check_trend(trend);
  if (!(noise.std >= 0.0)) throw Error(ErrorCode::InvalidConfig, "noise std must be >= 0");

  const double rate = 2.0 * kPi / trend.period;
  Eigen::VectorXd epochs(count);
  Eigen::MatrixXd samples(count, trend.m);
  for (Index i = 0; i < count; ++i) {
    const double t = static_cast<double>(i + 1);
    epochs(i) = t;
    for (Index j = 0; j < trend.m; ++j) {
      samples(i, j) = trend.amplitude * std::sin(rate * t + phase(trend, j));
    }
  }

  Rng rng(noise.seed);
  switch (noise.mode) {
    case NoiseMode::None:
      break;
    case NoiseMode::Common:
      for (Index i = 0; i < count; ++i) {
        const double u = noise.std * standard_normal(rng);
        samples.row(i).array() += u;
      }
      break;
    case NoiseMode::Independent:
      for (Index i = 0; i < count; ++i) {
        for (Index j = 0; j < trend.m; ++j) samples(i, j) += noise.std * standard_normal(rng);
      }
      break;
  }
  return validate_series(std::move(epochs), std::move(samples));
}

Eigen::RowVectorXd true_trend(const TrendSpec& trend, double t, int derivative) {
  check_trend(trend);
  if (derivative < 0) throw Error(ErrorCode::InvalidConfig, "derivative order must be >= 0");
  const double rate = 2.0 * kPi / trend.period;
  const double scale = trend.amplitude * std::pow(rate, derivative);
  Eigen::RowVectorXd out(trend.m);
  for (Index j = 0; j < trend.m; ++j) {
    out(j) = scale * std::sin(rate * t + phase(trend, j) + derivative * (kPi / 2.0));
  }
  return out;
}

}  // namespace gmtrend
