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

#ifndef SECGAP_CORE_H_
#define SECGAP_CORE_H_

#include <optional>
#include <span>
#include <vector>

namespace secgap {

// Multiset of non-negative weights held by the adversary.
//
// Weights are kept as natural logs (weight 0 is -inf) together with a linear
// view. Element indices are 0-based; rank 0 is the largest weight. Equal
// weights are ranked by lower original index first.
class WeightProfile {
 public:
  // Throws std::invalid_argument on an empty input, a negative or NaN weight.
  static WeightProfile FromWeights(std::span<const double> weights);
  // Throws std::invalid_argument on an empty input, NaN or +inf.
  static WeightProfile FromLogWeights(std::vector<double> log_weights);

  int size() const { return static_cast<int>(log_weights_.size()); }

  double weight(int i) const { return weights_[i]; }
  double log_weight(int i) const { return log_weights_[i]; }
  std::span<const double> weights() const { return weights_; }
  std::span<const double> log_weights() const { return log_weights_; }

  // Index of the element with the given rank (0 = largest).
  int sorted_index(int rank) const { return order_[rank]; }
  // Linear weight of the element with the given rank.
  double sorted_weight(int rank) const { return weights_[order_[rank]]; }
  double max_weight() const { return weights_[order_[0]]; }
  double max_log_weight() const { return log_weights_[order_[0]]; }

  // Shifts all log-weights so the largest linear weight is exactly 1.
  // All-zero profiles are returned unchanged.
  WeightProfile Normalized() const;

 private:
  WeightProfile(std::vector<double> log_weights, std::vector<double> weights);

  std::vector<double> log_weights_;
  std::vector<double> weights_;
  std::vector<int> order_;
};

// One realization of the arrival times, one per element, each in [0, 1].
class ArrivalDraw {
 public:
  // Throws std::invalid_argument on an empty input or a time outside [0, 1].
  explicit ArrivalDraw(std::vector<double> times);

  int size() const { return static_cast<int>(times_.size()); }
  double time(int i) const { return times_[i]; }
  std::span<const double> times() const { return times_; }

  // Element indices sorted by arrival; equal times go to the lower index.
  std::vector<int> ArrivalOrder() const;

 private:
  std::vector<double> times_;
};

// A (possibly erroneous) prediction of the additive gap w_1 - w_k.
struct GapInfo {
  double value = 0.0;
  std::optional<int> k;  // 1-based rank index, 2 <= k <= n
  std::optional<double> error_bound;

  // Throws std::invalid_argument when the fields are out of range for a
  // profile with `n` elements.
  void Validate(int n) const;
};

// What a single-selection algorithm accepted on one draw.
struct SelectionOutcome {
  std::optional<int> accepted_index;
  double accepted_weight = 0.0;
  std::optional<double> accept_time;

  bool accepted() const { return accepted_index.has_value(); }
  static SelectionOutcome None() { return {}; }
};

bool operator==(const SelectionOutcome& a, const SelectionOutcome& b);

// Throws std::invalid_argument when the sizes differ.
void CheckSameSize(const WeightProfile& profile, const ArrivalDraw& arrivals);

// Maximum weight among elements with arrival time <= tau; 0 when none has
// arrived yet.
double BestSoFar(const WeightProfile& profile, const ArrivalDraw& arrivals,
                 double tau);

// w_1 - w_k for the 1-based rank k in [2, n].
double TrueGap(const WeightProfile& profile, int k);

// |gap.value - TrueGap(profile, gap.k)|. Requires gap.k.
double PredictionError(const GapInfo& gap, const WeightProfile& profile);

}  // namespace secgap

#endif  // SECGAP_CORE_H_
