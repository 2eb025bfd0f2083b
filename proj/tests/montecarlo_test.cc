// Copyright 2026 The secgap Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "secgap/montecarlo.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"
#include "secgap/bounds.h"

namespace secgap {
namespace {

WeightProfile Profile(std::vector<double> w) {
  return WeightProfile::FromWeights(w);
}

ExperimentConfig Config(InstanceFamily family, int n, int iterations) {
  ExperimentConfig c;
  c.family = family;
  c.n = n;
  c.iterations = iterations;
  c.master_seed = 2026;
  return c;
}

TEST(ExactExpectation, HandExample) {
  const double e = ExactExpectationSmallN(
      Profile({2, 1}),
      {.algorithm = Algorithm::kExactGap, .tau = 0.5, .gap = 0.0});
  EXPECT_NEAR(e, 0.875, 1e-12);
}

TEST(ExactExpectation, SingleElement) {
  for (double tau : {0.0, 0.3, 0.9}) {
    EXPECT_NEAR(ExactExpectationSmallN(
                    Profile({3.0}),
                    {.algorithm = Algorithm::kClassical, .tau = tau}),
                (1 - tau) * 3.0, 1e-12);
  }
}

TEST(ExactExpectation, OvershootSelectsNothing) {
  EXPECT_EQ(ExactExpectationSmallN(
                Profile({2, 1, 0.5}),
                {.algorithm = Algorithm::kExactGap, .tau = 0.2, .gap = 5.0}),
            0.0);
}

TEST(ExactExpectation, RobustWithZeroGammaMatchesExactGap) {
  const WeightProfile p = Profile({5, 1, 3, 2});
  const double a = ExactExpectationSmallN(
      p, {.algorithm = Algorithm::kExactGap, .tau = 0.3, .gap = 2.0});
  const double b = ExactExpectationSmallN(
      p, {.algorithm = Algorithm::kRobustConsistent,
          .tau = 0.3,
          .gamma = 0.0,
          .gap = 2.0});
  EXPECT_NEAR(a, b, 1e-12);
}

TEST(ExactExpectation, RejectsLargeN) {
  EXPECT_THROW(ExactExpectationSmallN(Profile({1, 2, 3, 4, 5, 6, 7}),
                                      {.algorithm = Algorithm::kClassical}),
               std::invalid_argument);
}

TEST(EstimateRatio, AgreesWithEnumeration) {
  const WeightProfile p = Profile({4, 1, 2.5});
  const std::vector<SingleSelectionParams> cases = {
      {.algorithm = Algorithm::kClassical, .tau = 0.3},
      {.algorithm = Algorithm::kStrictClassical, .tau = 0.3},
      {.algorithm = Algorithm::kExactGap, .tau = 0.2, .gap = 1.5},
      {.algorithm = Algorithm::kBoundedError,
       .tau = 0.2,
       .gap = 2.0,
       .epsilon = 0.5},
      {.algorithm = Algorithm::kRobustConsistent,
       .tau = 0.2,
       .gamma = 0.3,
       .gap = 1.5},
  };
  for (const auto& params : cases) {
    ExperimentConfig c = Config(InstanceFamily::Exponential(), 3, 40000);
    c.fixed_profiles = {p};
    c.algorithm = {.algorithm = params.algorithm,
                   .tau = params.tau,
                   .gamma = params.gamma,
                   .epsilon = params.epsilon};
    c.gap.absolute = params.gap;
    const RatioEstimate est = EstimateRatio(c);
    const double exact = ExactExpectationSmallN(p, params) / 4.0;
    EXPECT_NEAR(est.mean, exact, 4 * est.std_error)
        << AlgorithmName(params.algorithm);
  }
}

TEST(EstimateRatio, SingleElementIsOneMinusTau) {
  ExperimentConfig c = Config(InstanceFamily::Exponential(), 1, 20000);
  c.algorithm = {.algorithm = Algorithm::kClassical, .tau = 0.5};
  const RatioEstimate est = EstimateRatio(c);
  EXPECT_NEAR(est.mean, 0.5, 4 * est.std_error);
  EXPECT_NEAR(est.select_best_prob + est.none_prob, 1.0, 1e-12);
}

TEST(EstimateRatio, IndependentOfThreadCount) {
  ExperimentConfig c = Config(InstanceFamily::Pareto(), 50, 3000);
  c.algorithm = {.algorithm = Algorithm::kRobustConsistent,
                 .tau = 0.2,
                 .gamma = 0.05};
  c.gap.sigma = 1.3;
  c.gap.noise = 0.01;
  const RatioEstimate one = EstimateRatio(c);
  c.threads = 4;
  const RatioEstimate four = EstimateRatio(c);
  EXPECT_EQ(one.mean, four.mean);
  EXPECT_EQ(one.std_error, four.std_error);
  EXPECT_EQ(one.select_best_prob, four.select_best_prob);
  EXPECT_EQ(one.ratio_of_means, four.ratio_of_means);
}

TEST(EstimateRatio, ZeroSigmaEqualsClassical) {
  ExperimentConfig c = Config(InstanceFamily::ChiSquared(), 40, 2000);
  c.algorithm = {.algorithm = Algorithm::kExactGap, .tau = 0.2};
  c.gap.sigma = 0.0;
  const RatioEstimate gap = EstimateRatio(c);
  c.algorithm.algorithm = Algorithm::kClassical;
  const RatioEstimate classical = EstimateRatio(c);
  EXPECT_EQ(gap.mean, classical.mean);
  EXPECT_EQ(gap.none_prob, classical.none_prob);
}

TEST(EstimateRatio, EstimatorsDifferOnlyInReportedMean) {
  ExperimentConfig c = Config(InstanceFamily::Exponential(), 30, 2000);
  const RatioEstimate a = EstimateRatio(c);
  c.estimator = Estimator::kRatioOfMeans;
  const RatioEstimate b = EstimateRatio(c);
  EXPECT_EQ(a.mean, a.mean_of_ratios);
  EXPECT_EQ(b.mean, b.ratio_of_means);
  EXPECT_EQ(a.ratio_of_means, b.ratio_of_means);
  EXPECT_GT(b.std_error, 0.0);
}

TEST(EstimateRatio, UnknownKNeedsFixedTau) {
  ExperimentConfig c = Config(InstanceFamily::Exponential(), 30, 500);
  c.gap.k = std::nullopt;
  EXPECT_NO_THROW(EstimateRatio(c));
  c.algorithm.tau_policy = TauPolicy::kFromK;
  EXPECT_THROW(EstimateRatio(c), std::invalid_argument);
}

TEST(EstimateRatio, ValidatesConfig) {
  ExperimentConfig c = Config(InstanceFamily::Exponential(), 30, 100);
  c.algorithm.tau = 1.5;
  EXPECT_THROW(EstimateRatio(c), std::invalid_argument);
  c.algorithm.tau = 0.2;
  c.gap.k = 31;
  EXPECT_THROW(EstimateRatio(c), std::out_of_range);
  c.gap.k = 2;
  c.iterations = 0;
  EXPECT_THROW(EstimateRatio(c), std::invalid_argument);
  c.iterations = 10;
  c.algorithm = {.algorithm = Algorithm::kRobustConsistent,
                 .tau = 0.5,
                 .gamma = 0.6};
  EXPECT_THROW(EstimateRatio(c), std::invalid_argument);
}

TEST(EstimateRatio, TauPolicies) {
  ExperimentConfig c = Config(InstanceFamily::Exponential(), 30, 10);
  c.algorithm.tau = 0.2;
  c.algorithm.tau_policy = TauPolicy::kFromK;
  EXPECT_DOUBLE_EQ(c.TauFor(7), TauForK(7));
  c.algorithm.tau_policy = TauPolicy::kMin;
  EXPECT_DOUBLE_EQ(c.TauFor(2), 0.2);
  EXPECT_DOUBLE_EQ(c.TauFor(100), TauForK(100));
}

TEST(EstimateLSelection, GeometricProfileClearsBound) {
  std::vector<double> w(20);
  for (int i = 0; i < 20; ++i) w[i] = std::pow(0.8, i);
  const WeightProfile p = Profile(w);
  ExperimentConfig c = Config(InstanceFamily::Exponential(), 20, 20000);
  c.algorithm.tau = 1 / std::numbers::e;
  const int l = 3;
  const RatioEstimate est = EstimateLSelection(c, l, p);
  const double opt = w[0] + w[1] + w[2];
  EXPECT_GE(est.mean, LSelectionBound(l, w[2] / opt) - 3 * est.std_error);
  EXPECT_LE(est.mean, 1.0);
}

TEST(EstimateLSelection, Validation) {
  ExperimentConfig c = Config(InstanceFamily::Exponential(), 5, 10);
  EXPECT_THROW(EstimateLSelection(c, 1), std::out_of_range);
  EXPECT_THROW(EstimateLSelection(c, 5), std::out_of_range);
  c.gap.absolute = 0.0;
  EXPECT_NO_THROW(EstimateLSelection(c, 5));
}

TEST(Sweeps, KSweepLayout) {
  ExperimentConfig c = Config(InstanceFamily::Exponential(), 20, 300);
  const std::vector<int> ks = {2, 10, 20};
  const std::vector<AlgorithmConfig> algos = {
      {.algorithm = Algorithm::kExactGap, .tau = 0.2},
      {.algorithm = Algorithm::kExactGap,
       .tau = 0.2,
       .tau_policy = TauPolicy::kFromK}};
  const std::vector<SweepRow> rows = SweepK(c, ks, algos);
  ASSERT_EQ(rows.size(), 9u);
  EXPECT_EQ(rows[0].k, 2);
  EXPECT_DOUBLE_EQ(rows[1].tau, TauForK(2));
  EXPECT_EQ(rows[2].algorithm.algorithm, Algorithm::kClassical);
  EXPECT_DOUBLE_EQ(rows[2].tau, 1 / std::numbers::e);
  EXPECT_EQ(rows[2].estimate.mean, rows[8].estimate.mean);
  EXPECT_THROW(SweepK(c, std::vector<int>{21}, algos), std::out_of_range);
}

TEST(Sweeps, SigmaSweepLayout) {
  ExperimentConfig c = Config(InstanceFamily::Exponential(), 20, 300);
  const std::vector<double> sigmas = {0.0, 1.0, 2.0};
  const std::vector<int> ks = {5};
  const std::vector<AlgorithmConfig> algos = {
      {.algorithm = Algorithm::kExactGap, .tau = 0.2},
      {.algorithm = Algorithm::kRobustConsistent, .tau = 0.2, .gamma = 0.05}};
  const std::vector<SweepRow> rows = SweepSigma(c, sigmas, ks, algos);
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows[4].sigma, 2.0);
  EXPECT_EQ(rows[5].algorithm.algorithm, Algorithm::kRobustConsistent);
  EXPECT_THROW(SweepSigma(c, std::vector<double>{}, ks, algos),
               std::invalid_argument);
}

}  // namespace
}  // namespace secgap
