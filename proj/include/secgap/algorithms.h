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

#ifndef SECGAP_ALGORITHMS_H_
#define SECGAP_ALGORITHMS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "secgap/core.h"

namespace secgap {

// Waiting time tau and the late-phase length gamma of the robust-consistent
// rule. Requires 0 <= tau < 1 and 0 <= gamma < 1 - tau.
class PolicySchedule {
 public:
  // Throws std::invalid_argument when the constraints fail.
  PolicySchedule(double tau, double gamma = 0.0);

  double tau() const { return tau_; }
  double gamma() const { return gamma_; }
  // Time after which the gap is dropped from the threshold.
  double switch_time() const { return 1.0 - gamma_; }

 private:
  double tau_;
  double gamma_;
};

// Throws std::invalid_argument unless 0 <= tau < 1.
void ValidateTau(double tau);

// Accepts the first element after tau whose weight is >= BSF(tau).
SelectionOutcome RunClassical(const WeightProfile& profile,
                              const ArrivalDraw& arrivals, double tau);

// Accepts the first element after tau whose weight is > BSF(tau). Ties with
// the observed maximum are rejected.
SelectionOutcome RunStrictClassical(const WeightProfile& profile,
                                    const ArrivalDraw& arrivals, double tau);

// Accepts the first element after tau whose weight is >= max(BSF(tau), gap).
SelectionOutcome RunExactGap(const WeightProfile& profile,
                             const ArrivalDraw& arrivals, double tau,
                             double gap);

// Threshold max(BSF(tau), predicted_gap) on (tau, 1 - gamma], BSF(tau) after.
SelectionOutcome RunRobustConsistent(const WeightProfile& profile,
                                     const ArrivalDraw& arrivals,
                                     const PolicySchedule& schedule,
                                     double predicted_gap);

// Exact-gap rule with the gap max(predicted_gap - epsilon, 0).
SelectionOutcome RunBoundedError(const WeightProfile& profile,
                                 const ArrivalDraw& arrivals, double tau,
                                 double predicted_gap, double epsilon);

struct AcceptedElement {
  int index = 0;
  double weight = 0.0;
  double time = 0.0;
};

// Snapshot of the reference set right after an update.
struct ReferenceSetSnapshot {
  double time = 0.0;
  std::vector<double> weights;  // descending; placeholders show as 0
};

struct MultiSelectionOutcome {
  std::vector<AcceptedElement> accepted;
  // Final reference set, descending by weight. Placeholder entries (index -1)
  // stand for missing elements when fewer than L arrived before tau.
  std::vector<AcceptedElement> reference_set;
  std::vector<ReferenceSetSnapshot> reference_set_trace;

  double total_weight() const;
};

// Virtual-algorithm style L-selection with an additive gap. The reference
// set R is seeded at tau with the L heaviest pre-tau arrivals and padded with
// weight-0 placeholders that count as pre-tau. A later arrival is accepted
// when its weight is >= max(r_L, gap) and r_L arrived before tau. Every
// arrival with weight >= max(r_L, gap) replaces r_L in R, accepted or not.
// Throws std::out_of_range unless 1 <= L <= n.
MultiSelectionOutcome RunLSelectionGap(const WeightProfile& profile,
                                       const ArrivalDraw& arrivals, double tau,
                                       double gap, int l,
                                       bool record_trace = false);

enum class Algorithm {
  kClassical,
  kStrictClassical,
  kExactGap,
  kRobustConsistent,
  kBoundedError,
  kLSelection,
};

std::string_view AlgorithmName(Algorithm algorithm);
// Accepts the CLI spellings: classical, strict-classical, exact-gap, robust,
// bounded, l-select. Throws std::invalid_argument otherwise.
Algorithm ParseAlgorithm(std::string_view name);

// Parameters for any of the single-selection rules; `gap` is c, c-hat or
// c-tilde depending on the rule and is ignored by the classical ones.
struct SingleSelectionParams {
  Algorithm algorithm = Algorithm::kClassical;
  double tau = 0.0;
  double gamma = 0.0;
  double gap = 0.0;
  double epsilon = 0.0;

  // Throws std::invalid_argument on a domain violation or for kLSelection.
  void Validate() const;
};

// Dispatches to the matching Run* function.
SelectionOutcome RunSingleSelection(const WeightProfile& profile,
                                    const ArrivalDraw& arrivals,
                                    const SingleSelectionParams& params);

}  // namespace secgap

#endif  // SECGAP_ALGORITHMS_H_
