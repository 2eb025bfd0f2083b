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

#include "secgap/algorithms.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace secgap {
namespace {

// Earliest element (by time, then index) with time in (lo, hi] that passes
// `accept`. Returns -1 when there is none.
template <typename Pred>
int EarliestIn(const WeightProfile& profile, const ArrivalDraw& arrivals,
               double lo, double hi, Pred accept) {
  int best = -1;
  double best_time = 0.0;
  for (int i = 0; i < profile.size(); ++i) {
    const double t = arrivals.time(i);
    if (t <= lo || t > hi) continue;
    if (best >= 0 && t >= best_time) continue;
    if (!accept(profile.weight(i))) continue;
    best = i;
    best_time = t;
  }
  return best;
}

SelectionOutcome Accept(const WeightProfile& profile,
                        const ArrivalDraw& arrivals, int index) {
  if (index < 0) return SelectionOutcome::None();
  return SelectionOutcome{index, profile.weight(index), arrivals.time(index)};
}

// Single pass over the draw: BSF(tau) plus the earliest post-tau element
// meeting `threshold` (non-strict) or exceeding it (strict).
SelectionOutcome RunThreshold(const WeightProfile& profile,
                              const ArrivalDraw& arrivals, double tau,
                              double gap, bool strict) {
  CheckSameSize(profile, arrivals);
  ValidateTau(tau);
  const double threshold = std::max(BestSoFar(profile, arrivals, tau), gap);
  int index;
  if (strict) {
    index = EarliestIn(profile, arrivals, tau, 1.0,
                       [threshold](double w) { return w > threshold; });
  } else {
    index = EarliestIn(profile, arrivals, tau, 1.0,
                       [threshold](double w) { return w >= threshold; });
  }
  return Accept(profile, arrivals, index);
}

void CheckGap(double gap, const char* what) {
  if (!(gap >= 0.0)) {
    throw std::invalid_argument(std::string(what) + " must be non-negative");
  }
}

}  // namespace

PolicySchedule::PolicySchedule(double tau, double gamma)
    : tau_(tau), gamma_(gamma) {
  ValidateTau(tau);
  if (!(gamma >= 0.0 && gamma < 1.0 - tau)) {
    throw std::invalid_argument("gamma must lie in [0, 1 - tau)");
  }
}

void ValidateTau(double tau) {
  if (!(tau >= 0.0 && tau < 1.0)) {
    throw std::invalid_argument("tau must lie in [0,1)");
  }
}

SelectionOutcome RunClassical(const WeightProfile& profile,
                              const ArrivalDraw& arrivals, double tau) {
  return RunThreshold(profile, arrivals, tau, 0.0, /*strict=*/false);
}

SelectionOutcome RunStrictClassical(const WeightProfile& profile,
                                    const ArrivalDraw& arrivals, double tau) {
  return RunThreshold(profile, arrivals, tau, 0.0, /*strict=*/true);
}

SelectionOutcome RunExactGap(const WeightProfile& profile,
                             const ArrivalDraw& arrivals, double tau,
                             double gap) {
  CheckGap(gap, "gap");
  return RunThreshold(profile, arrivals, tau, gap, /*strict=*/false);
}

SelectionOutcome RunRobustConsistent(const WeightProfile& profile,
                                     const ArrivalDraw& arrivals,
                                     const PolicySchedule& schedule,
                                     double predicted_gap) {
  CheckSameSize(profile, arrivals);
  CheckGap(predicted_gap, "predicted gap");
  const double tau = schedule.tau();
  const double switch_time = schedule.switch_time();
  const double bsf = BestSoFar(profile, arrivals, tau);
  const double trusting = std::max(bsf, predicted_gap);
  int index = EarliestIn(profile, arrivals, tau, switch_time,
                         [trusting](double w) { return w >= trusting; });
  if (index < 0) {
    index = EarliestIn(profile, arrivals, switch_time, 1.0,
                       [bsf](double w) { return w >= bsf; });
  }
  return Accept(profile, arrivals, index);
}

SelectionOutcome RunBoundedError(const WeightProfile& profile,
                                 const ArrivalDraw& arrivals, double tau,
                                 double predicted_gap, double epsilon) {
  CheckGap(predicted_gap, "predicted gap");
  CheckGap(epsilon, "epsilon");
  return RunThreshold(profile, arrivals, tau,
                      std::max(predicted_gap - epsilon, 0.0),
                      /*strict=*/false);
}

double MultiSelectionOutcome::total_weight() const {
  double total = 0.0;
  for (const auto& a : accepted) total += a.weight;
  return total;
}

MultiSelectionOutcome RunLSelectionGap(const WeightProfile& profile,
                                       const ArrivalDraw& arrivals, double tau,
                                       double gap, int l, bool record_trace) {
  CheckSameSize(profile, arrivals);
  ValidateTau(tau);
  CheckGap(gap, "gap");
  if (l < 1 || l > profile.size()) {
    throw std::out_of_range("L must lie in [1, n]");
  }

  struct Entry {
    double weight;
    double time;
    int index;  // -1 for a placeholder
    bool before_tau;
  };
  // Descending weight; among equal weights the earlier arrival ranks higher,
  // so r_L (the back) is the latest of the lightest entries.
  auto heavier = [](const Entry& a, const Entry& b) {
    if (a.weight != b.weight) return a.weight > b.weight;
    if (a.time != b.time) return a.time < b.time;
    return a.index < b.index;
  };

  const std::vector<int> order = arrivals.ArrivalOrder();
  std::vector<Entry> reference;
  size_t pos = 0;
  for (; pos < order.size() && arrivals.time(order[pos]) <= tau; ++pos) {
    const int i = order[pos];
    reference.push_back({profile.weight(i), arrivals.time(i), i, true});
  }
  std::stable_sort(reference.begin(), reference.end(), heavier);
  if (reference.size() > static_cast<size_t>(l)) reference.resize(l);
  while (reference.size() < static_cast<size_t>(l)) {
    reference.push_back({0.0, 0.0, -1, true});
  }

  MultiSelectionOutcome out;
  auto snapshot = [&](double time) {
    if (!record_trace) return;
    ReferenceSetSnapshot s{time, {}};
    for (const auto& e : reference) s.weights.push_back(e.weight);
    out.reference_set_trace.push_back(std::move(s));
  };
  snapshot(tau);

  for (; pos < order.size(); ++pos) {
    const int i = order[pos];
    const double w = profile.weight(i);
    const Entry& r_l = reference.back();
    if (w < std::max(r_l.weight, gap)) continue;
    // R tracks the L heaviest gap-clearing weights seen so far; only a
    // displaced pre-tau entry pays for an acceptance.
    if (r_l.before_tau) out.accepted.push_back({i, w, arrivals.time(i)});
    reference.pop_back();
    Entry added{w, arrivals.time(i), i, false};
    reference.insert(
        std::upper_bound(reference.begin(), reference.end(), added, heavier),
        added);
    snapshot(arrivals.time(i));
  }

  for (const auto& e : reference) {
    out.reference_set.push_back({e.index, e.weight, e.time});
  }
  return out;
}

std::string_view AlgorithmName(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kClassical:
      return "classical";
    case Algorithm::kStrictClassical:
      return "strict-classical";
    case Algorithm::kExactGap:
      return "exact-gap";
    case Algorithm::kRobustConsistent:
      return "robust";
    case Algorithm::kBoundedError:
      return "bounded";
    case Algorithm::kLSelection:
      return "l-select";
  }
  return "unknown";
}

Algorithm ParseAlgorithm(std::string_view name) {
  for (Algorithm a :
       {Algorithm::kClassical, Algorithm::kStrictClassical,
        Algorithm::kExactGap, Algorithm::kRobustConsistent,
        Algorithm::kBoundedError, Algorithm::kLSelection}) {
    if (AlgorithmName(a) == name) return a;
  }
  throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

void SingleSelectionParams::Validate() const {
  if (algorithm == Algorithm::kLSelection) {
    throw std::invalid_argument("l-select is not a single-selection rule");
  }
  if (algorithm == Algorithm::kRobustConsistent) {
    PolicySchedule(tau, gamma);
  } else {
    ValidateTau(tau);
  }
  CheckGap(gap, "gap");
  CheckGap(epsilon, "epsilon");
}

SelectionOutcome RunSingleSelection(const WeightProfile& profile,
                                    const ArrivalDraw& arrivals,
                                    const SingleSelectionParams& params) {
  switch (params.algorithm) {
    case Algorithm::kClassical:
      return RunClassical(profile, arrivals, params.tau);
    case Algorithm::kStrictClassical:
      return RunStrictClassical(profile, arrivals, params.tau);
    case Algorithm::kExactGap:
      return RunExactGap(profile, arrivals, params.tau, params.gap);
    case Algorithm::kRobustConsistent:
      return RunRobustConsistent(profile, arrivals,
                                 PolicySchedule(params.tau, params.gamma),
                                 params.gap);
    case Algorithm::kBoundedError:
      return RunBoundedError(profile, arrivals, params.tau, params.gap,
                             params.epsilon);
    case Algorithm::kLSelection:
      break;
  }
  throw std::invalid_argument("l-select is not a single-selection rule");
}

}  // namespace secgap
