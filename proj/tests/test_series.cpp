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

#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "gmtrend/error.hpp"
#include "gmtrend/series.hpp"
#include "test_support.hpp"

using namespace gmtrend;

namespace {

MultiSeries small_series() {
  Eigen::VectorXd s(3);
  s << 1, 2, 3;
  Eigen::MatrixXd y(3, 1);
  y << 5, 6, 8;
  return validate_series(s, y);
}

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected gmtrend::Error";
  return ErrorCode::IoFailure;
}

}  // namespace

TEST(ValidateSeries, AcceptsWellFormedInput) {
  const MultiSeries series = small_series();
  EXPECT_EQ(series.size(), 3);
  EXPECT_EQ(series.dim(), 1);
  EXPECT_EQ(series.epoch(3), 3.0);
  EXPECT_EQ(series.row(2)(0), 6.0);
}

TEST(ValidateSeries, RejectsDuplicateEpochs) {
  Eigen::VectorXd s(3);
  s << 1, 1, 2;
  EXPECT_EQ(code_of([&] { validate_series(s, Eigen::MatrixXd::Zero(3, 2)); }),
            ErrorCode::NonIncreasingEpochs);
  // Epochs are checked before shape.
  EXPECT_EQ(code_of([&] { validate_series(s, Eigen::MatrixXd::Zero(5, 2)); }),
            ErrorCode::NonIncreasingEpochs);
}

TEST(ValidateSeries, RejectsShapeMismatch) {
  Eigen::VectorXd s(2);
  s << 1, 2;
  EXPECT_EQ(code_of([&] { validate_series(s, Eigen::MatrixXd::Zero(3, 1)); }),
            ErrorCode::ShapeMismatch);
}

TEST(ValidateSeries, RejectsNonFinite) {
  Eigen::VectorXd s(3);
  s << 1, 2, 3;
  Eigen::MatrixXd y = Eigen::MatrixXd::Zero(3, 2);
  y(1, 1) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_EQ(code_of([&] { validate_series(s, y); }), ErrorCode::NonFiniteValue);
  y(1, 1) = std::numeric_limits<double>::infinity();
  EXPECT_EQ(code_of([&] { validate_series(s, y); }), ErrorCode::NonFiniteValue);
}

TEST(ValidateSeries, RejectsSingleEpoch) {
  Eigen::VectorXd s(1);
  s << 1;
  EXPECT_EQ(code_of([&] { validate_series(s, Eigen::MatrixXd::Zero(1, 1)); }),
            ErrorCode::SeriesTooShort);
}

TEST(ExtractWindow, WholeSeriesAndSuffix) {
  const MultiSeries series = small_series();
  const SampleWindow whole = extract_window(series, 3, 2);
  EXPECT_EQ(whole.anchor, 3);
  EXPECT_EQ(whole.epochs, (Eigen::VectorXd(3) << 1, 2, 3).finished());
  EXPECT_EQ(whole.values, (Eigen::MatrixXd(3, 1) << 5, 6, 8).finished());

  const SampleWindow tail = extract_window(series, 3, 1);
  EXPECT_EQ(tail.epochs, (Eigen::VectorXd(2) << 2, 3).finished());
  EXPECT_EQ(tail.values, (Eigen::MatrixXd(2, 1) << 6, 8).finished());
}

TEST(ExtractWindow, OutOfRange) {
  const MultiSeries series = small_series();
  EXPECT_EQ(code_of([&] { extract_window(series, 2, 2); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([&] { extract_window(series, 4, 1); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([&] { extract_window(series, 3, 0); }), ErrorCode::IndexOutOfRange);
}

TEST(ToIncrements, HandValues) {
  SampleWindow w;
  w.epochs = (Eigen::VectorXd(3) << 0, 1, 2).finished();
  w.values = (Eigen::MatrixXd(3, 1) << 5, 6, 8).finished();
  const IncrementWindow inc = to_increments(w);
  EXPECT_EQ(inc.times, (Eigen::VectorXd(2) << 1, 2).finished());
  EXPECT_EQ(inc.increments, (Eigen::MatrixXd(1, 2) << 1, 3).finished());

  SampleWindow w2;
  w2.epochs = (Eigen::VectorXd(2) << 0, 2).finished();
  w2.values = (Eigen::MatrixXd(2, 2) << 1, 1, 2, 4).finished();
  const IncrementWindow inc2 = to_increments(w2);
  EXPECT_EQ(inc2.times, (Eigen::VectorXd(1) << 2).finished());
  EXPECT_EQ(inc2.last_increment(), (Eigen::VectorXd(2) << 1, 3).finished());
}

TEST(ToIncrements, ConstantWindowHasZeroIncrements) {
  SampleWindow w;
  w.epochs = (Eigen::VectorXd(4) << 0, 1, 3, 4).finished();
  w.values = Eigen::MatrixXd::Constant(4, 3, 2.5);
  EXPECT_TRUE(to_increments(w).increments.isZero(0.0));
}

TEST(ToIncrements, TranslationInvarianceAndEndpoints) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const MultiSeries series = fixtures::random_series(rng, 12, 3);
    const SampleWindow w = extract_window(series, 12, 8);
    const IncrementWindow base = to_increments(w);

    EXPECT_EQ(base.last_time(), w.epochs(8) - w.epochs(0));
    EXPECT_EQ(base.last_increment(), (w.values.row(8) - w.values.row(0)).transpose().eval());

    // Shifts by exactly representable constants keep every difference exact.
    SampleWindow shifted = w;
    shifted.epochs.array() += 1024.0;
    shifted.values.rowwise() += (Eigen::RowVectorXd(3) << 64.0, -32.0, 0.5).finished();
    const IncrementWindow moved = to_increments(shifted);
    EXPECT_LT(fixtures::rel_error(moved.times, base.times), 1e-12);
    EXPECT_LT(fixtures::rel_error(moved.increments, base.increments), 1e-12);
  }
}

TEST(ExtractWindow, RoundTripsValuesBitExactly) {
  std::mt19937_64 rng(3);
  const MultiSeries series = fixtures::random_series(rng, 40, 4);
  for (Index q = 6; q <= 40; ++q) {
    const SampleWindow w = extract_window(series, q, 5);
    for (Index r = 0; r < 6; ++r) {
      EXPECT_EQ(w.values.row(r), series.row(q - 5 + r));
      EXPECT_EQ(w.epochs(r), series.epoch(q - 5 + r));
    }
  }
}

TEST(ForecastConfig, Validation) {
  ForecastConfig config;
  config.window = 10;
  config.horizon = 100;
  EXPECT_NO_THROW(validate_config(config, 111));
  EXPECT_EQ(code_of([&] { validate_config(config, 110); }), ErrorCode::SeriesTooShort);

  config.method = Method::LeastSquares;
  config.order = 3;
  config.window = 2;
  EXPECT_EQ(code_of([&] { validate_config(config, 200); }), ErrorCode::Underdetermined);

  config.window = 1;
  EXPECT_EQ(code_of([&] { validate_config(config, 200); }), ErrorCode::InvalidConfig);
}

TEST(ForecastConfig, AnchorRange) {
  ForecastConfig config;
  config.window = 10;
  config.horizon = 100;
  config.order = 3;
  const AnchorRange all = anchor_range(config, 4000);
  EXPECT_EQ(all.first, 11);
  EXPECT_EQ(all.last, 3900);
  EXPECT_EQ(all.count(), 3890);

  config.skip_warmup = true;
  const AnchorRange warm = anchor_range(config, 4000);
  EXPECT_EQ(warm.first, 31);
  EXPECT_EQ(warm.last, 3900);
}

TEST(MultiSeries, SelectColumns) {
  Eigen::VectorXd s(2);
  s << 1, 2;
  Eigen::MatrixXd y(2, 3);
  y << 1, 2, 3, 4, 5, 6;
  const MultiSeries series = validate_series(s, y);
  const int cols[] = {3, 1};
  const MultiSeries picked = series.select_columns(cols);
  EXPECT_EQ(picked.samples(), (Eigen::MatrixXd(2, 2) << 3, 1, 6, 4).finished());
  const int bad[] = {4};
  EXPECT_EQ(code_of([&] { series.select_columns(bad); }), ErrorCode::IndexOutOfRange);
}
