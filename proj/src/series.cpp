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

#include "gmtrend/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gmtrend/error.hpp"

namespace gmtrend {

const char* method_name(Method method) noexcept {
  switch (method) {
    case Method::GaussMarkov: return "gm";
    case Method::LeastSquares: return "ls";
    case Method::Naive: return "naive";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  if (name == "gm" || name == "gaussian-markov") return Method::GaussMarkov;
  if (name == "ls" || name == "least-squares") return Method::LeastSquares;
  if (name == "naive") return Method::Naive;
  throw Error(ErrorCode::InvalidConfig, "unknown method '" + std::string(name) + "'");
}

void validate_config(const ForecastConfig& config, Index sample_count) {
  if (config.order < 0) {
    throw Error(ErrorCode::InvalidConfig, "order must be >= 0");
  }
  if (config.window < 2) {
    throw Error(ErrorCode::InvalidConfig, "window must be >= 2");
  }
  if (config.horizon < 1) {
    throw Error(ErrorCode::InvalidConfig, "horizon must be >= 1");
  }
  const Index n = config.window;
  const Index p = config.horizon;
  if (n + 1 > sample_count - p) {
    throw Error(ErrorCode::SeriesTooShort,
                "need N - p >= n + 1 (N=" + std::to_string(sample_count) +
                    ", n=" + std::to_string(n) + ", p=" + std::to_string(p) + ")");
  }
  if (config.method == Method::LeastSquares && n + 1 < config.order + 1) {
    throw Error(ErrorCode::Underdetermined,
                "window of " + std::to_string(n + 1) + " samples cannot fit " +
                    std::to_string(config.order + 1) + " coefficients");
  }
}

AnchorRange anchor_range(const ForecastConfig& config, Index sample_count) {
  validate_config(config, sample_count);
  const Index n = config.window;
  AnchorRange range{n + 1, sample_count - config.horizon};
  if (config.skip_warmup) {
    range.first = std::max<Index>(range.first, Index{config.order} * n + 1);
    if (range.count() == 0) {
      throw Error(ErrorCode::SeriesTooShort, "no anchors left after skipping warm-up");
    }
  }
  return range;
}

double MultiSeries::epoch(Index q) const {
  if (q < 1 || q > size()) {
    throw Error(ErrorCode::IndexOutOfRange, "epoch index " + std::to_string(q));
  }
  return epochs_(q - 1);
}

Eigen::RowVectorXd MultiSeries::row(Index q) const {
  if (q < 1 || q > size()) {
    throw Error(ErrorCode::IndexOutOfRange, "row index " + std::to_string(q));
  }
  return samples_.row(q - 1);
}

MultiSeries MultiSeries::select_columns(std::span<const int> columns) const {
  if (columns.empty()) {
    throw Error(ErrorCode::ShapeMismatch, "empty column selection");
  }
  Eigen::MatrixXd picked(size(), static_cast<Index>(columns.size()));
  for (std::size_t c = 0; c < columns.size(); ++c) {
    const int j = columns[c];
    if (j < 1 || j > dim()) {
      throw Error(ErrorCode::IndexOutOfRange, "series index " + std::to_string(j));
    }
    picked.col(static_cast<Index>(c)) = samples_.col(j - 1);
  }
  return MultiSeries(epochs_, std::move(picked));
}

MultiSeries validate_series(Eigen::VectorXd epochs, Eigen::MatrixXd samples) {
  for (Index i = 0; i < epochs.size(); ++i) {
    if (!std::isfinite(epochs(i))) {
      throw Error(ErrorCode::NonFiniteValue, "epoch " + std::to_string(i + 1));
    }
    if (i > 0 && !(epochs(i) > epochs(i - 1))) {
      throw Error(ErrorCode::NonIncreasingEpochs,
                  "epoch " + std::to_string(i + 1) + " does not exceed its predecessor");
    }
  }
  if (samples.rows() != epochs.size()) {
    throw Error(ErrorCode::ShapeMismatch, std::to_string(samples.rows()) + " sample rows for " +
                                              std::to_string(epochs.size()) + " epochs");
  }
  if (samples.cols() < 1) {
    throw Error(ErrorCode::ShapeMismatch, "at least one series is required");
  }
  if (epochs.size() < 2) {
    throw Error(ErrorCode::SeriesTooShort, "at least two epochs are required");
  }
  if (!samples.allFinite()) {
    throw Error(ErrorCode::NonFiniteValue, "samples contain NaN or Inf");
  }
  return MultiSeries(std::move(epochs), std::move(samples));
}

SampleWindow extract_window(const Eigen::VectorXd& epochs, const Eigen::MatrixXd& values,
                            Index q, Index n) {
  if (n < 1 || q - n < 1 || q > values.rows()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "window q=" + std::to_string(q) + ", n=" + std::to_string(n) + " outside 1.." +
                    std::to_string(values.rows()));
  }
  SampleWindow window;
  window.anchor = q;
  window.epochs = epochs.segment(q - n - 1, n + 1);
  window.values = values.middleRows(q - n - 1, n + 1);
  return window;
}

SampleWindow extract_window(const MultiSeries& series, Index q, Index n) {
  return extract_window(series.epochs(), series.samples(), q, n);
}

IncrementWindow to_increments(const SampleWindow& window) {
  const Index n = window.increments();
  IncrementWindow inc;
  inc.times = window.epochs.tail(n).array() - window.epochs(0);
  inc.increments = (window.values.bottomRows(n).rowwise() - window.values.row(0)).transpose();
  return inc;
}

}  // namespace gmtrend
