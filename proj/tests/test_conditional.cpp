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

#include "gmtrend/conditional.hpp"
#include "gmtrend/error.hpp"
#include "gmtrend/estimation.hpp"
#include "gmtrend/kernel.hpp"
#include "test_support.hpp"

using namespace gmtrend;

namespace {

Eigen::MatrixXd scalar(double v) { return Eigen::MatrixXd::Constant(1, 1, v); }

double min_eigenvalue(const Eigen::MatrixXd& a) {
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(a, Eigen::EigenvaluesOnly)
      .eigenvalues()
      .minCoeff();
}

}  // namespace

TEST(BuildJoint, ScalarExample) {
  const ConditionalSystem sys = build_joint(scalar(0.5), scalar(-2.0), 2.0, 3.0);
  EXPECT_FALSE(sys.repaired);
  EXPECT_EQ(sys.joint(), (Eigen::MatrixXd(2, 2) << 19.5, 13, 13, 9).finished());
  const Eigen::VectorXd mean = conditional_mean(sys, Eigen::VectorXd::Constant(1, 3.0));
  EXPECT_NEAR(mean(0), 13.0 / 3.0, 1e-12);
  EXPECT_NEAR(conditional_covariance(sys)(0, 0), 19.5 - 169.0 / 9.0, 1e-12);
}

TEST(BuildJoint, RepairedExample) {
  const ConditionalSystem sys = build_joint(scalar(1.0), scalar(1.0), 0.5, 2.0);
  EXPECT_TRUE(sys.repaired);
  EXPECT_EQ(sys.joint(), (Eigen::MatrixXd(2, 2) << -2.0, -0.5, -0.5, 0.25).finished());
  const Eigen::MatrixXd fixed = sys.repaired_joint();
  EXPECT_EQ(fixed, fixed.transpose());
  EXPECT_GT(min_eigenvalue(fixed), 0.0);
  const Eigen::VectorXd mean = conditional_mean(sys, Eigen::VectorXd::Constant(1, 1.0));
  EXPECT_TRUE(mean.allFinite());
  EXPECT_GE(conditional_covariance(sys)(0, 0), -1e-12);
}

TEST(BuildJoint, BadTimesAndShapes) {
  try {
    build_joint(scalar(1.0), scalar(0.0), 0.0, 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadTimes);
  }
  try {
    build_joint(scalar(1.0), scalar(0.0), 2.0, 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadTimes);
  }
  try {
    build_joint(scalar(1.0), Eigen::MatrixXd::Zero(2, 2), 1.0, 2.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ShapeMismatch);
  }
}

TEST(ClosedForm, ZeroEndpoint) {
  try {
    linear_mean_closed_form(scalar(1.0), 1.0, Eigen::VectorXd::Zero(1), 2.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroEndpoint);
  }
}

TEST(ClosedForm, AgreesWithConditioningOnFittedWindows) {
  std::mt19937_64 rng(41);
  int compared = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Eigen::Index n = 2 + trial % 12;
    const Eigen::Index m = 1 + trial % 4;
    const MultiSeries s = fixtures::random_series(rng, n + 1, m);
    const IncrementWindow inc = to_increments(extract_window(s, n + 1, n));
    const Eigen::MatrixXd a = estimate_alpha(inc);
    const double tn = inc.last_time();
    const Eigen::VectorXd xn = inc.last_increment();
    const Eigen::MatrixXd b = estimate_beta(a, tn, xn);
    const double target = tn + 0.25 + (trial % 7);
    const ConditionalSystem sys = build_joint(a, b, tn, target);
    if (sys.repaired) continue;
    ++compared;
    EXPECT_LT(fixtures::rel_error(conditional_mean(sys, xn),
                                 linear_mean_closed_form(a, tn, xn, target)),
              1e-8)
        << "trial " << trial;
  }
  EXPECT_GT(compared, 100);
}

TEST(ConditionalMean, LinearInEndpoint) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index m = 1 + trial % 5;
    const Eigen::MatrixXd a = fixtures::random_psd(rng, m, m) + Eigen::MatrixXd::Identity(m, m);
    const Eigen::MatrixXd b = 0.1 * fixtures::random_symmetric(rng, m);
    const ConditionalSystem sys = build_joint(a, b, 1.0, 1.5);
    const Eigen::VectorXd x = fixtures::random_matrix(rng, m, 1);
    const Eigen::VectorXd y = fixtures::random_matrix(rng, m, 1);
    const Eigen::VectorXd lhs = conditional_mean(sys, 2.0 * x - 3.0 * y);
    const Eigen::VectorXd rhs = 2.0 * conditional_mean(sys, x) - 3.0 * conditional_mean(sys, y);
    EXPECT_LT(fixtures::rel_error(lhs, rhs), 1e-10);
  }
}

TEST(ConditionalCovariance, PsdAndSymmetric) {
  std::mt19937_64 rng(43);
  int repaired = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Eigen::Index n = 2 + trial % 10;
    const Eigen::Index m = 1 + trial % 5;
    const MultiSeries s = fixtures::random_series(rng, n + 1, m);
    const IncrementWindow inc = to_increments(extract_window(s, n + 1, n));
    const Eigen::MatrixXd a = estimate_alpha(inc);
    const Eigen::MatrixXd b = estimate_beta(a, inc.last_time(), inc.last_increment());
    const ConditionalSystem sys =
        build_joint(a, b, inc.last_time(), inc.last_time() * (1.0 + (trial % 5)));
    repaired += sys.repaired ? 1 : 0;
    const Eigen::MatrixXd cov = conditional_covariance(sys);
    EXPECT_EQ(cov, cov.transpose());
    const double scale = std::max(sys.repaired_joint().norm(), 1e-300);
    EXPECT_GE(min_eigenvalue(cov), -1e-8 * scale);
  }
  EXPECT_GT(repaired, 0);
}

TEST(ConditionalMean, MarkovAgainstFullHistory) {
  // With a valid kernel, conditioning on the whole past equals conditioning
  // on the last value.
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::Index m = 1 + trial % 3;
    const Eigen::MatrixXd alpha =
        fixtures::random_psd(rng, m, m) + 0.5 * Eigen::MatrixXd::Identity(m, m);
    const Eigen::MatrixXd beta = 0.02 * fixtures::random_psd(rng, m, m);
    const KernelParams params(alpha, beta);
    const double horizon = std::min(validity_horizon(params), 10.0);
    const Eigen::VectorXd times = horizon * (Eigen::VectorXd(4) << 0.1, 0.2, 0.4, 0.6).finished();
    const double target = 0.8 * horizon;

    const Eigen::Index h = times.size();
    Eigen::MatrixXd past(h * m, h * m), cross(m, h * m);
    for (Eigen::Index i = 0; i < h; ++i) {
      cross.middleCols(i * m, m) = kernel_eval(params, target, times(i));
      for (Eigen::Index j = 0; j < h; ++j) {
        past.block(i * m, j * m, m, m) = kernel_eval(params, times(i), times(j));
      }
    }
    const Eigen::VectorXd history = fixtures::random_matrix(rng, h * m, 1);
    const Eigen::VectorXd full = cross * past.ldlt().solve(history);

    const ConditionalSystem sys = build_joint(alpha, beta, times(h - 1), target);
    ASSERT_FALSE(sys.repaired);
    const Eigen::VectorXd last = conditional_mean(sys, history.tail(m));
    EXPECT_LT(fixtures::rel_error(last, full), 1e-8);
  }
}
