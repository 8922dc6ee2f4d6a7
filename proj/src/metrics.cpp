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

#include "gmtrend/metrics.hpp"

#include <cmath>
#include <string>

#include "gmtrend/error.hpp"

namespace gmtrend {

void CompensatedSum::add(double x) {
  const double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x)) {
    compensation_ += (sum_ - t) + x;
  } else {
    compensation_ += (x - t) + sum_;
  }
  sum_ = t;
}

Eigen::RowVectorXd naive_forecast(const MultiSeries& series, Index q) { return series.row(q); }

ForecastSequence naive_forecast_all(const MultiSeries& series, const ForecastConfig& config) {
  const AnchorRange range = anchor_range(config, series.size());
  ForecastSequence out;
  out.reserve(static_cast<std::size_t>(range.count()));
  for (Index q = range.first; q <= range.last; ++q) {
    out.push_back({q, naive_forecast(series, q)});
  }
  return out;
}

namespace {

bool covers_exactly(const ForecastSequence& forecasts, AnchorRange range) {
  if (static_cast<Index>(forecasts.size()) != range.count()) return false;
  for (std::size_t i = 0; i < forecasts.size(); ++i) {
    if (forecasts[i].anchor != range.first + static_cast<Index>(i)) return false;
  }
  return true;
}

}  // namespace

MaseReport mase(const ForecastSequence& forecasts, const MultiSeries& series,
                const ForecastConfig& config) {
  const Index count = series.size();
  const Index m = series.dim();
  const AnchorRange evaluated = anchor_range(config, count);

  std::size_t offset = 0;
  if (!covers_exactly(forecasts, evaluated)) {
    ForecastConfig full = config;
    full.skip_warmup = false;
    const AnchorRange all = anchor_range(full, count);
    if (!config.skip_warmup || !covers_exactly(forecasts, all)) {
      throw Error(ErrorCode::AnchorMismatch,
                  "forecasts must cover anchors " + std::to_string(evaluated.first) + ".." +
                      std::to_string(evaluated.last));
    }
    offset = static_cast<std::size_t>(evaluated.first - all.first);
  }

  const Index p = config.horizon;
  const Eigen::MatrixXd& y = series.samples();
  std::vector<CompensatedSum> numer(static_cast<std::size_t>(m));
  std::vector<CompensatedSum> denom(static_cast<std::size_t>(m));
  for (Index q = evaluated.first; q <= evaluated.last; ++q) {
    const AnchoredForecast& f = forecasts[offset + static_cast<std::size_t>(q - evaluated.first)];
    if (f.value.size() != m) {
      throw Error(ErrorCode::ShapeMismatch, "forecast at anchor " + std::to_string(q) + " has " +
                                                std::to_string(f.value.size()) + " entries");
    }
    for (Index j = 0; j < m; ++j) {
      const double actual = y(q + p - 1, j);
      numer[static_cast<std::size_t>(j)].add(std::abs(f.value(j) - actual));
      denom[static_cast<std::size_t>(j)].add(std::abs(y(q - 1, j) - actual));
    }
  }

  MaseReport report;
  report.values.resize(m);
  report.anchor_count = evaluated.count();
  report.config = config;
  report.skipped_warmup = config.skip_warmup;
  for (Index j = 0; j < m; ++j) {
    const double d = denom[static_cast<std::size_t>(j)].value();
    if (d == 0.0) {
      throw Error(ErrorCode::DegenerateDenominator,
                  "series " + std::to_string(j + 1) + " has zero naive error over the anchors");
    }
    report.values(j) = numer[static_cast<std::size_t>(j)].value() / d;
  }
  return report;
}

}  // namespace gmtrend
