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

#ifndef SECGAP_BOUNDS_H_
#define SECGAP_BOUNDS_H_

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace secgap {

// Best any single-selection rule can do knowing w_1 - w_2 = 0 (two-best
// secretary hardness). Reference value only.
inline constexpr double kTwoBestUpperBound = 0.5736;

// Largest k scanned explicitly by the worst-case aggregation; the k -> inf
// limit is added analytically.
inline constexpr int kDefaultWorstCaseKMax = 10000;

// A competitive-ratio lower bound together with the terms it was composed
// from, in the order they appear in the formula.
struct GuaranteeReport {
  double alpha = 0.0;
  std::vector<std::pair<std::string, double>> components;
  std::string binding_term;
  // Coefficient c of the additive penalty: E[ALG] >= alpha * w1 - c * eps.
  double epsilon_penalty = 0.0;

  // Throws std::out_of_range for an unknown name.
  double component(const std::string& name) const;
  // alpha * w1 - epsilon_penalty * epsilon.
  double LowerBound(double w1, double epsilon) const;
};

// How the k-dependent term is handled in the robust-consistent consistency
// bound: a specific k, or the infimum over {2, ..., k_max} plus k -> inf.
class KAggregation {
 public:
  static KAggregation Fixed(int k);
  static KAggregation WorstCase(int k_max = kDefaultWorstCaseKMax);

  bool worst_case() const { return !k_.has_value(); }
  int k() const { return *k_; }
  int k_max() const { return k_max_; }
  std::string ToString() const;

 private:
  KAggregation(std::optional<int> k, int k_max) : k_(k), k_max_(k_max) {}
  std::optional<int> k_;
  int k_max_;
};

// 1 - (1/(k+1))^(1/k). Throws std::invalid_argument for k < 2.
double TauForK(int k);

// min(case1, max(case2_i, case2_ii)) with
//   case1    = (1-tau) k / (2(k-1))
//   case2_i  = (k+1)/(2k) (1 - tau - (1-tau)^(k+1))
//   case2_ii = 3/2 tau ln(1/tau) - 1/2 tau (1-tau).
// Requires 0 < tau < 1 and k >= 2.
GuaranteeReport AlphaExact(double tau, int k);

// max(0.4, 1/2 (1/(k+1))^(1/k)).
double GuaranteeExactGap(int k);

// tau ln(1/(1-gamma)). Requires 0 <= tau < 1 and 0 <= gamma <= 1 - tau.
double Robustness(double tau, double gamma);

// Robust-consistent consistency bound min(min(a1, a2), max(a3, a4)).
// Requires 0 < tau < 1 and 0 <= gamma <= 1 - tau.
GuaranteeReport Consistency(double tau, double gamma,
                            KAggregation aggregation = KAggregation::WorstCase());

// (k+1)/(2k) (1 - tau - (1-tau)^(k+1)).
double Alpha3(double tau, int k);
// Infimum of Alpha3 over k in {2, ..., k_max} and the k -> inf limit
// (1-tau)/2. The second member is the minimizing k (0 for the limit).
std::pair<double, int> Alpha3Infimum(double tau, int k_max);

struct FrontierPoint {
  double robustness_target = 0.0;
  bool feasible = false;
  double tau = 0.0;
  double gamma = 0.0;
  double consistency = 0.0;
  double robustness = 0.0;
};

// For each target r, the grid point (tau, gamma) with the largest
// consistency among those with Robustness >= r. Grid: tau = i * step for
// 0 < tau < 1 and gamma = j * step for 0 <= gamma < 1 - tau. Ties go to the
// lexicographically smallest (tau, gamma).
// Throws std::invalid_argument on an empty target list or a step outside
// (0, 0.1].
std::vector<FrontierPoint> Frontier(
    std::span<const double> robustness_targets, double grid_step,
    KAggregation aggregation = KAggregation::WorstCase(), int threads = 1);

// Exact-gap alpha with the -2 eps penalty of the bounded-error rule.
GuaranteeReport GuaranteeBoundedError(double tau, int k);

// Large-n probability of selecting w_1 with the strict threshold rule when
// w_2 = w_3: 1/2 tau (1-tau)^2 + tau ln(1/tau). Requires 0 < tau <= 1.
double TwoThreeTieProb(double tau);
// Finite-n value 1/2 tau (1-tau)^2 + sum_{i=1}^{n-1} tau (1-tau)^i / i
//   + (1-tau)^n / n. Requires n >= 3.
double TwoThreeTieProbExact(double tau, int n);

// 1/e + beta/(2e) (1 - 1/L + 1/(L e^L)). Requires L >= 2, 0 <= beta <= 1/L.
double LSelectionBound(int l, double beta);

}  // namespace secgap

#endif  // SECGAP_BOUNDS_H_
