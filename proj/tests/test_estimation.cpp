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

#include "gmtrend/error.hpp"
#include "gmtrend/estimation.hpp"
#include "gmtrend/kernel.hpp"
#include "test_support.hpp"

using namespace gmtrend;

namespace {

IncrementWindow make_increments(std::initializer_list<double> t, const Eigen::MatrixXd& x) {
  IncrementWindow inc;
  inc.times = Eigen::VectorXd::Map(t.begin(), static_cast<Index>(t.size()));
  inc.increments = x;
  return inc;
}

// Entry-by-entry evaluation of the estimator, written independently of the
// vectorised implementation.
Eigen::MatrixXd alpha_oracle(const IncrementWindow& inc) {
  const Index n = inc.count();
  const Index m = inc.dim();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(m, m);
  for (Index a = 0; a < m; ++a) {
    for (Index b = 0; b < m; ++b) {
      double sum = 0.0;
      for (Index i = 0; i + 1 < n; ++i) {
        const double ti = inc.times(i), tj = inc.times(i + 1);
        const double va = tj * inc.increments(a, i) - ti * inc.increments(a, i + 1);
        const double vb = tj * inc.increments(b, i) - ti * inc.increments(b, i + 1);
        sum += va * vb / (ti * tj * (tj - ti));
      }
      out(a, b) = sum / static_cast<double>(n - 1);
    }
  }
  return out;
}

IncrementWindow random_increments(std::mt19937_64& rng, Index n, Index m) {
  const MultiSeries s = fixtures::random_series(rng, n + 1, m);
  return to_increments(extract_window(s, n + 1, n));
}

}  // namespace

TEST(EstimateAlpha, ScalarHandValue) {
  const IncrementWindow inc = make_increments({1.0, 2.0}, (Eigen::MatrixXd(1, 2) << 1, 3).finished());
  EXPECT_DOUBLE_EQ(estimate_alpha(inc)(0, 0), 0.5);
}

TEST(EstimateAlpha, LinearDataGivesZero) {
  const Eigen::VectorXd b = (Eigen::VectorXd(3) << 0.5, -2.0, 4.0).finished();
  IncrementWindow inc;
  inc.times = (Eigen::VectorXd(4) << 1.0, 2.0, 4.0, 8.0).finished();
  inc.increments = b * inc.times.transpose();
  EXPECT_TRUE(estimate_alpha(inc).isZero(1e-12));
}

TEST(EstimateAlpha, TooFewIncrements) {
  const IncrementWindow inc = make_increments({1.0}, Eigen::MatrixXd::Ones(2, 1));
  try {
    estimate_alpha(inc);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooFewIncrements);
  }
}

TEST(EstimateAlpha, MatchesEntrywiseOracle) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const IncrementWindow inc = random_increments(rng, 2 + trial % 15, 1 + trial % 5);
    EXPECT_LT(fixtures::rel_error(estimate_alpha(inc), alpha_oracle(inc)), 1e-12);
  }
}

TEST(EstimateAlpha, SymmetricPsd) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::MatrixXd a = estimate_alpha(random_increments(rng, 2 + trial % 20, 1 + trial % 8));
    EXPECT_EQ(a, a.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(a);
    const Eigen::VectorXd d = eig.eigenvalues();
    EXPECT_GE(d.minCoeff(), -1e-10 * d.cwiseAbs().maxCoeff());
  }
}

TEST(EstimateAlpha, ScaleEquivariance) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 50; ++trial) {
    const IncrementWindow inc = random_increments(rng, 8, 3);
    const Eigen::MatrixXd base = estimate_alpha(inc);

    IncrementWindow scaled_x = inc;
    scaled_x.increments *= 3.7;
    EXPECT_LT(fixtures::rel_error(estimate_alpha(scaled_x), 3.7 * 3.7 * base), 1e-12);

    IncrementWindow scaled_t = inc;
    scaled_t.times *= 2.5;
    EXPECT_LT(fixtures::rel_error(estimate_alpha(scaled_t), base / 2.5), 1e-12);
  }
}

TEST(EstimateAlpha, UnbiasedOnSimulatedPaths) {
  Eigen::MatrixXd alpha(2, 2);
  alpha << 1.0, 0.3, 0.3, 0.5;
  Eigen::MatrixXd beta(2, 2);
  beta << 0.03, 0.01, 0.01, 0.02;
  const KernelParams params(alpha, beta);
  const Eigen::VectorXd epochs = Eigen::VectorXd::LinSpaced(10, 1.0, 10.0);
  ASSERT_GT(validity_horizon(params), 10.0);

  Rng rng(20240601);
  Eigen::MatrixXd mean = Eigen::MatrixXd::Zero(2, 2);
  const int windows = 2000;
  for (int w = 0; w < windows; ++w) {
    const SamplePath path = simulate_path(params, epochs, rng);
    IncrementWindow inc;
    inc.times = epochs;
    inc.increments = path.values.transpose();
    mean += estimate_alpha(inc);
  }
  mean /= windows;
  EXPECT_LT(fixtures::rel_error(mean, alpha), 0.05);
}

TEST(EstimateBeta, HandValues) {
  const Eigen::MatrixXd a = Eigen::MatrixXd::Constant(1, 1, 0.5);
  const Eigen::VectorXd x = Eigen::VectorXd::Constant(1, 3.0);
  EXPECT_DOUBLE_EQ(estimate_beta(a, 2.0, x)(0, 0), -2.0);

  const Eigen::VectorXd x2 = (Eigen::VectorXd(2) << 1, 0).finished();
  const Eigen::MatrixXd b2 = estimate_beta(Eigen::MatrixXd::Identity(2, 2), 1.0, x2);
  EXPECT_EQ(b2, (Eigen::MatrixXd(2, 2) << 0, 0, 0, 1).finished());

  std::mt19937_64 rng(4);
  const Eigen::MatrixXd a3 = fixtures::random_psd(rng, 3, 3);
  EXPECT_LT(fixtures::rel_error(estimate_beta(a3, 4.0, Eigen::VectorXd::Zero(3)), a3 / 4.0), 1e-15);
}

TEST(EstimateBeta, EndpointIdentity) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 100; ++trial) {
    const IncrementWindow inc = random_increments(rng, 2 + trial % 10, 1 + trial % 6);
    const Eigen::MatrixXd a = estimate_alpha(inc);
    const double tn = inc.last_time();
    const Eigen::VectorXd xn = inc.last_increment();
    const Eigen::MatrixXd b = estimate_beta(a, tn, xn);
    EXPECT_LT(fixtures::rel_error(tn * (a - b * tn), xn * xn.transpose()), 1e-12);
  }
}

TEST(EstimateBeta, NonPositiveTime) {
  try {
    estimate_beta(Eigen::MatrixXd::Identity(1, 1), 0.0, Eigen::VectorXd::Ones(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonPositiveTime);
  }
}
