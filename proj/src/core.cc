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

#include "secgap/core.h"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace secgap {

WeightProfile::WeightProfile(std::vector<double> log_weights,
                             std::vector<double> weights)
    : log_weights_(std::move(log_weights)),
      weights_(std::move(weights)),
      order_(log_weights_.size()) {
  std::iota(order_.begin(), order_.end(), 0);
  // Sort by log-weight so that profiles whose linear view under- or
  // overflows still rank correctly.
  std::stable_sort(order_.begin(), order_.end(), [this](int a, int b) {
    return log_weights_[a] > log_weights_[b];
  });
}

WeightProfile WeightProfile::FromWeights(std::span<const double> weights) {
  if (weights.empty()) {
    throw std::invalid_argument("weight profile must have n >= 1");
  }
  std::vector<double> logs;
  logs.reserve(weights.size());
  for (double w : weights) {
    if (std::isnan(w) || w < 0.0) {
      throw std::invalid_argument("weights must be non-negative");
    }
    logs.push_back(std::log(w));
  }
  return WeightProfile(std::move(logs),
                       std::vector<double>(weights.begin(), weights.end()));
}

WeightProfile WeightProfile::FromLogWeights(std::vector<double> log_weights) {
  if (log_weights.empty()) {
    throw std::invalid_argument("weight profile must have n >= 1");
  }
  std::vector<double> linear;
  linear.reserve(log_weights.size());
  for (double lw : log_weights) {
    if (std::isnan(lw) || lw == std::numeric_limits<double>::infinity()) {
      throw std::invalid_argument("log-weights must be finite or -inf");
    }
    linear.push_back(std::exp(lw));
  }
  return WeightProfile(std::move(log_weights), std::move(linear));
}

WeightProfile WeightProfile::Normalized() const {
  const double max_log = max_log_weight();
  if (max_log == -std::numeric_limits<double>::infinity()) return *this;
  const double max_lin = max_weight();
  const bool linear_ok = std::isfinite(max_lin) && max_lin > 0.0;
  std::vector<double> logs(log_weights_.size());
  std::vector<double> lin(weights_.size());
  for (size_t i = 0; i < logs.size(); ++i) {
    logs[i] = log_weights_[i] - max_log;
    // Dividing in the linear domain keeps exact ratios such as 4/10 when the
    // linear view is representable; underflowed entries come from the log.
    const bool exact = linear_ok && (weights_[i] >= DBL_MIN ||
                                     log_weights_[i] == -HUGE_VAL);
    lin[i] = exact ? weights_[i] / max_lin : std::exp(logs[i]);
  }
  WeightProfile out(std::move(logs), std::move(lin));
  out.order_ = order_;
  return out;
}

ArrivalDraw::ArrivalDraw(std::vector<double> times) : times_(std::move(times)) {
  if (times_.empty()) {
    throw std::invalid_argument("arrival draw must have n >= 1");
  }
  for (double t : times_) {
    if (!(t >= 0.0 && t <= 1.0)) {
      throw std::invalid_argument("arrival times must lie in [0,1]");
    }
  }
}

std::vector<int> ArrivalDraw::ArrivalOrder() const {
  std::vector<int> order(times_.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [this](int a, int b) { return times_[a] < times_[b]; });
  return order;
}

void GapInfo::Validate(int n) const {
  if (!(value >= 0.0)) {
    throw std::invalid_argument("gap value must be non-negative");
  }
  if (k && (*k < 2 || *k > n)) {
    throw std::out_of_range("gap index k must lie in [2, n]");
  }
  if (error_bound && !(*error_bound >= 0.0)) {
    throw std::invalid_argument("error bound must be non-negative");
  }
}

bool operator==(const SelectionOutcome& a, const SelectionOutcome& b) {
  return a.accepted_index == b.accepted_index &&
         a.accepted_weight == b.accepted_weight &&
         a.accept_time == b.accept_time;
}

void CheckSameSize(const WeightProfile& profile, const ArrivalDraw& arrivals) {
  if (profile.size() != arrivals.size()) {
    throw std::invalid_argument(
        "profile has " + std::to_string(profile.size()) +
        " elements but arrival draw has " + std::to_string(arrivals.size()));
  }
}

double BestSoFar(const WeightProfile& profile, const ArrivalDraw& arrivals,
                 double tau) {
  CheckSameSize(profile, arrivals);
  double best = 0.0;
  for (int i = 0; i < profile.size(); ++i) {
    if (arrivals.time(i) <= tau) best = std::max(best, profile.weight(i));
  }
  return best;
}

double TrueGap(const WeightProfile& profile, int k) {
  if (k < 2 || k > profile.size()) {
    throw std::out_of_range("gap index k must lie in [2, n], got " +
                            std::to_string(k));
  }
  return profile.sorted_weight(0) - profile.sorted_weight(k - 1);
}

double PredictionError(const GapInfo& gap, const WeightProfile& profile) {
  if (!gap.k) {
    throw std::invalid_argument("prediction error needs the gap index k");
  }
  return std::abs(gap.value - TrueGap(profile, *gap.k));
}

}  // namespace secgap
