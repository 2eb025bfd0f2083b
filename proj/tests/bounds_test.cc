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

#include "secgap/bounds.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"

namespace secgap {
namespace {

constexpr double kInvE = 1.0 / std::numbers::e;

TEST(TauForK, Values) {
  EXPECT_NEAR(TauForK(2), 1.0 - 1.0 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(TauForK(2), 0.4226, 1e-4);
  EXPECT_NEAR(TauForK(7), 0.2570, 1e-4);
  EXPECT_LT(TauForK(1000000), 1e-4);
  EXPECT_THROW(TauForK(1), std::invalid_argument);
}

TEST(AlphaExact, TauPointTwoKTwo) {
  const GuaranteeReport r = AlphaExact(0.2, 2);
  const double expected = 0.3 * std::log(5.0) - 0.08;
  EXPECT_NEAR(r.alpha, expected, 1e-14);
  EXPECT_NEAR(r.alpha, 0.40283, 1e-5);
  EXPECT_NEAR(r.component("case1"), 0.8, 1e-15);
  EXPECT_NEAR(r.component("case2_i"), 0.216, 1e-15);
  EXPECT_EQ(r.binding_term, "case2_ii");
}

TEST(AlphaExact, FirstTermAtKSeven) {
  const double v = AlphaExact(TauForK(7), 7).component("case1");
  EXPECT_NEAR(v, 0.4334, 1e-4);
  EXPECT_GE(v, 0.43);
}

TEST(AlphaExact, FirstTermMinimizedAtKSeven) {
  double best = 1.0;
  int arg = 0;
  for (int k = 2; k <= 1000; ++k) {
    const double v = AlphaExact(TauForK(k), k).component("case1");
    if (v < best) {
      best = v;
      arg = k;
    }
  }
  EXPECT_EQ(arg, 7);
}

TEST(AlphaExact, AlphaComposesComponents) {
  for (double tau : {0.05, 0.2, 0.5, 0.9}) {
    for (int k : {2, 3, 10, 1000}) {
      const GuaranteeReport r = AlphaExact(tau, k);
      const double expect =
          std::min(r.component("case1"),
                   std::max(r.component("case2_i"), r.component("case2_ii")));
      EXPECT_EQ(r.alpha, expect);
      EXPECT_GE(r.alpha, 0.0);
      EXPECT_LE(r.alpha, 1.0);
    }
  }
}

TEST(AlphaExact, DomainErrors) {
  EXPECT_THROW(AlphaExact(0.0, 2), std::invalid_argument);
  EXPECT_THROW(AlphaExact(1.0, 2), std::invalid_argument);
  EXPECT_THROW(AlphaExact(0.5, 1), std::invalid_argument);
}

TEST(AlphaExact, TauPointTwoAlwaysAtLeastPointFour) {
  for (int k = 2; k <= 200000; ++k) ASSERT_GE(AlphaExact(0.2, k).alpha, 0.4);
}

TEST(GuaranteeExactGap, Values) {
  EXPECT_EQ(GuaranteeExactGap(2), 0.4);
  EXPECT_NEAR(GuaranteeExactGap(1000000), 0.499993, 1e-6);
  EXPECT_LT(GuaranteeExactGap(1000000), 0.5);
  EXPECT_THROW(GuaranteeExactGap(1), std::invalid_argument);
}

TEST(GuaranteeExactGap, NeverExceedsProofAlpha) {
  for (int k = 2; k <= 100000; ++k) {
    ASSERT_LE(GuaranteeExactGap(k), AlphaExact(TauForK(k), k).alpha + 1e-12)
        << "k=" << k;
  }
}

TEST(Robustness, Values) {
  EXPECT_NEAR(Robustness(0.2, 0.6), 0.2 * std::log(2.5), 1e-15);
  EXPECT_NEAR(Robustness(0.2, 0.6), 0.18326, 1e-5);
  EXPECT_EQ(Robustness(0.3, 0.0), 0.0);
  EXPECT_NEAR(Robustness(kInvE, 1 - kInvE), kInvE, 1e-12);
  EXPECT_THROW(Robustness(0.5, 0.6), std::invalid_argument);
}

TEST(Robustness, IncreasingInGamma) {
  for (double tau : {0.1, 0.3, 0.6}) {
    double prev = -1;
    for (double g = 0; g < 1 - tau; g += 0.01) {
      const double r = Robustness(tau, g);
      EXPECT_GT(r, prev);
      prev = r;
    }
  }
}

TEST(Consistency, PaperPoint) {
  const GuaranteeReport r = Consistency(0.2, 0.6);
  EXPECT_NEAR(r.alpha, 0.38326, 1e-5);
  EXPECT_EQ(r.binding_term, "alpha1");
  EXPECT_NEAR(r.component("alpha4"), 0.3 * std::log(5.0) - 0.08, 1e-14);
}

TEST(Consistency, ClassicalParametersRecoverInverseE) {
  const GuaranteeReport r = Consistency(kInvE, 1 - kInvE);
  EXPECT_NEAR(r.component("alpha1"), kInvE, 1e-12);
  EXPECT_NEAR(r.alpha, kInvE, 1e-12);
}

TEST(Consistency, AlphaFourIndependentOfGammaAndK) {
  for (double g : {0.0, 0.3, 0.7}) {
    for (int k : {2, 50}) {
      EXPECT_NEAR(Consistency(0.2, g, KAggregation::Fixed(k)).component("alpha4"),
                  0.40283137373023015, 1e-14);
    }
  }
}

TEST(Consistency, GammaZeroMatchesExactGapTerms) {
  for (double tau : {0.1, 0.2, 0.4}) {
    for (int k : {2, 5, 40}) {
      const GuaranteeReport rc = Consistency(tau, 0.0, KAggregation::Fixed(k));
      const GuaranteeReport ex = AlphaExact(tau, k);
      EXPECT_NEAR(rc.component("alpha1"), 1 - tau, 1e-15);
      EXPECT_EQ(rc.component("alpha3"), ex.component("case2_i"));
      EXPECT_EQ(rc.component("alpha4"), ex.component("case2_ii"));
    }
  }
}

TEST(Consistency, WorstCaseIsBelowEveryFixedK) {
  for (double tau : {0.05, 0.2, 0.5}) {
    const double worst = Consistency(tau, 0.1).alpha;
    for (int k = 2; k <= 500; ++k) {
      EXPECT_LE(worst, Consistency(tau, 0.1, KAggregation::Fixed(k)).alpha);
    }
  }
}

TEST(Consistency, ComponentsInUnitInterval) {
  for (double tau = 0.01; tau < 1; tau += 0.07) {
    for (double g = 0; g < 1 - tau; g += 0.05) {
      for (const auto& [name, v] : Consistency(tau, g).components) {
        EXPECT_GE(v, 0.0) << name;
        EXPECT_LE(v, 1.0) << name;
      }
    }
  }
}

TEST(Alpha3Infimum, LimitTermIncluded) {
  // Alpha3(tau, k) decreases toward (1 - tau)/2 for small tau, so the limit
  // can be the infimum.
  const auto [value, arg] = Alpha3Infimum(0.01, 50);
  EXPECT_LE(value, 0.495 + 1e-15);
  EXPECT_GE(arg, 0);
}

TEST(Frontier, PaperPointIsFeasible) {
  const std::vector<double> targets = {Robustness(0.2, 0.6)};
  const auto pts = Frontier(targets, 0.001);
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_TRUE(pts[0].feasible);
  EXPECT_GE(pts[0].consistency, 0.383);
  EXPECT_GE(pts[0].robustness, targets[0]);
}

// Values frozen from an independent numpy grid search over the same grid
// (step 0.001, k in 2..10^4 plus the k -> inf limit).
TEST(Frontier, FrozenGridValues) {
  const std::vector<double> targets = {0.0, 0.2 * std::log(2.5), 0.3};
  const auto pts = Frontier(targets, 0.001);
  EXPECT_NEAR(pts[0].consistency, 0.4382449019342127, 1e-12);
  EXPECT_NEAR(pts[0].tau, 0.328, 1e-12);
  EXPECT_EQ(pts[0].gamma, 0.0);
  EXPECT_NEAR(pts[1].consistency, 0.42726990665082326, 1e-12);
  EXPECT_NEAR(pts[1].tau, 0.322, 1e-12);
  EXPECT_NEAR(pts[1].gamma, 0.434, 1e-12);
  EXPECT_NEAR(pts[2].consistency, 0.3745009188991832, 1e-12);
  // Far below the two-best bound; the k aggregation caps the endpoint.
  EXPECT_LT(pts[0].consistency, kTwoBestUpperBound);
}

TEST(Frontier, InfeasibleTargetFlagged) {
  const std::vector<double> targets = {kInvE};
  const auto pts = Frontier(targets, 0.01);
  EXPECT_FALSE(pts[0].feasible);
}

TEST(Frontier, NonIncreasingAndThreadIndependent) {
  std::vector<double> targets;
  for (double r = 0; r <= 0.37; r += 0.01) targets.push_back(r);
  const auto one = Frontier(targets, 0.005, KAggregation::WorstCase(), 1);
  const auto four = Frontier(targets, 0.005, KAggregation::WorstCase(), 4);
  for (size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].consistency, four[i].consistency);
    EXPECT_EQ(one[i].tau, four[i].tau);
    EXPECT_EQ(one[i].gamma, four[i].gamma);
    if (i > 0 && one[i].feasible) {
      EXPECT_LE(one[i].consistency, one[i - 1].consistency);
    }
  }
}

TEST(Frontier, InputValidation) {
  EXPECT_THROW(Frontier({}, 0.01), std::invalid_argument);
  const std::vector<double> t = {0.1};
  EXPECT_THROW(Frontier(t, 0.0), std::invalid_argument);
  EXPECT_THROW(Frontier(t, 0.2), std::invalid_argument);
}

TEST(GuaranteeBoundedError, Values) {
  for (int k : {2, 10, 100, 10000}) {
    const GuaranteeReport r = GuaranteeBoundedError(0.2, k);
    EXPECT_GE(r.alpha, 0.4);
    EXPECT_EQ(r.epsilon_penalty, 2.0);
    EXPECT_EQ(r.LowerBound(1.0, 0.0), AlphaExact(0.2, k).alpha);
    EXPECT_NEAR(r.LowerBound(2.0, 0.1), 2 * r.alpha - 0.2, 1e-15);
    EXPECT_GE(GuaranteeBoundedError(TauForK(k), k).alpha,
              GuaranteeExactGap(k) - 1e-12);
  }
}

TEST(TwoThreeTieProb, Values) {
  EXPECT_NEAR(TwoThreeTieProb(0.359), 0.4415245471872951, 1e-14);
  EXPECT_GE(TwoThreeTieProb(0.359), 0.441);
  EXPECT_LT(TwoThreeTieProb(1e-12), 1e-9);
  EXPECT_EQ(TwoThreeTieProb(1.0), 0.0);
  EXPECT_THROW(TwoThreeTieProb(0.0), std::invalid_argument);
}

TEST(TwoThreeTieProb, ExactSumApproachesApproximation) {
  EXPECT_NEAR(TwoThreeTieProbExact(0.359, 200), TwoThreeTieProb(0.359), 1e-6);
  EXPECT_NEAR(TwoThreeTieProbExact(0.359, 100000), TwoThreeTieProb(0.359),
              1e-12);
  // n = 3: w_1 wins whenever w_2 or w_3 is the threshold or nothing arrived.
  const double t = 0.3;
  const double direct = t * (1 - t) + t * (1 - t) * (1 - t) +
                        std::pow(1 - t, 3) / 3;
  EXPECT_NEAR(TwoThreeTieProbExact(t, 3), direct, 1e-15);
}

TEST(LSelectionBound, Values) {
  EXPECT_NEAR(LSelectionBound(2, 0.0), kInvE, 1e-15);
  EXPECT_NEAR(LSelectionBound(2, 0.3), 0.3992044293868903, 1e-14);
  for (int l : {2, 3, 10}) {
    double prev = 0;
    for (int i = 0; i <= 20; ++i) {
      const double v = LSelectionBound(l, i / (20.0 * l));
      EXPECT_GE(v, kInvE);
      EXPECT_GT(v, prev);
      prev = v;
    }
  }
  EXPECT_THROW(LSelectionBound(1, 0.1), std::invalid_argument);
  EXPECT_THROW(LSelectionBound(2, 0.6), std::invalid_argument);
}

}  // namespace
}  // namespace secgap
