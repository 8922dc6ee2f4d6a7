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

#include <span>
#include <vector>

#include <Eigen/Dense>

namespace gmtrend {

using Eigen::Index;

enum class Method { GaussMarkov, LeastSquares, Naive };

const char* method_name(Method method) noexcept;
Method parse_method(std::string_view name);

/// Order k, memory n and horizon p of a forecast run.
struct ForecastConfig {
  int order = 1;
  int window = 10;
  int horizon = 100;
  Method method = Method::GaussMarkov;
  bool skip_warmup = false;
};

/// Inclusive range of 1-based anchor indices q.
struct AnchorRange {
  Index first = 0;
  Index last = -1;

  Index count() const { return last >= first ? last - first + 1 : 0; }
  bool contains(Index q) const { return q >= first && q <= last; }
};

/// Throws InvalidConfig, SeriesTooShort or Underdetermined when the
/// configuration cannot be run on a series of `sample_count` epochs.
void validate_config(const ForecastConfig& config, Index sample_count);

/// Anchors q = n+1 ... N-p, or q >= k*n+1 when skip_warmup is set (the
/// anchors whose recursive windows never read zero-padded rows).
AnchorRange anchor_range(const ForecastConfig& config, Index sample_count);

/// Epochs plus an N x m sample matrix. Only obtainable through
/// validate_series, so every instance satisfies the invariants.
class MultiSeries {
 public:
  const Eigen::VectorXd& epochs() const { return epochs_; }
  const Eigen::MatrixXd& samples() const { return samples_; }

  Index size() const { return samples_.rows(); }
  Index dim() const { return samples_.cols(); }

  /// 1-based accessors.
  double epoch(Index q) const;
  Eigen::RowVectorXd row(Index q) const;

  /// Sub-series made of the given 1-based columns, in the given order.
  MultiSeries select_columns(std::span<const int> columns) const;

 private:
  friend MultiSeries validate_series(Eigen::VectorXd epochs, Eigen::MatrixXd samples);

  MultiSeries(Eigen::VectorXd epochs, Eigen::MatrixXd samples)
      : epochs_(std::move(epochs)), samples_(std::move(samples)) {}

  Eigen::VectorXd epochs_;
  Eigen::MatrixXd samples_;
};

MultiSeries validate_series(Eigen::VectorXd epochs, Eigen::MatrixXd samples);

/// Samples y_{q-n} ... y_q with their epochs.
struct SampleWindow {
  Index anchor = 0;
  Eigen::VectorXd epochs;
  Eigen::MatrixXd values;

  Index increments() const { return epochs.size() - 1; }
};

/// Times t_i = s_{q-n+i} - s_{q-n} and increments x_i (column i-1 of an
/// m x n matrix).
struct IncrementWindow {
  Eigen::VectorXd times;
  Eigen::MatrixXd increments;

  Index count() const { return times.size(); }
  Index dim() const { return increments.rows(); }
  double last_time() const { return times(times.size() - 1); }
  Eigen::VectorXd last_increment() const { return increments.col(increments.cols() - 1); }
};

SampleWindow extract_window(const MultiSeries& series, Index q, Index n);

/// Same as above over an arbitrary value matrix sharing the series' epochs
/// (used for the derivative series of the Taylor recursion).
SampleWindow extract_window(const Eigen::VectorXd& epochs, const Eigen::MatrixXd& values,
                            Index q, Index n);

IncrementWindow to_increments(const SampleWindow& window);

}  // namespace gmtrend
