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

#ifndef SECGAP_MONTECARLO_H_
#define SECGAP_MONTECARLO_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "secgap/algorithms.h"
#include "secgap/core.h"
#include "secgap/generators.h"

namespace secgap {

// How the waiting time is chosen for each cell.
enum class TauPolicy {
  kFixed,  // the configured tau
  kFromK,  // TauForK(k)
  kMin,    // min(configured tau, TauForK(k))
};

struct AlgorithmConfig {
  Algorithm algorithm = Algorithm::kExactGap;
  double tau = 0.2;
  TauPolicy tau_policy = TauPolicy::kFixed;
  double gamma = 0.0;    // robust only
  double epsilon = 0.0;  // bounded only
  int l = 1;             // l-select only
};

// Which gap the algorithm is fed on each iteration.
struct GapSpec {
  // 1-based rank of the gap element; nullopt means the index is unknown to
  // the algorithm and is drawn uniformly from [2, n] on every iteration.
  std::optional<int> k = 2;
  // Prediction = sigma * (realized true gap).
  double sigma = 1.0;
  // Replaces sigma * true gap when set.
  std::optional<double> absolute;
  // Adds Uniform[-noise, noise] to the prediction (clamped at 0).
  double noise = 0.0;
};

enum class Estimator {
  kMeanOfRatios,  // mean over iterations of accepted / max weight
  kRatioOfMeans,  // sum of accepted / sum of max weights (raw scale)
};

struct ExperimentConfig {
  InstanceFamily family;
  int n = 200;
  int iterations = 5000;
  AlgorithmConfig algorithm;
  GapSpec gap;
  uint64_t master_seed = 0;
  int threads = 1;
  Estimator estimator = Estimator::kMeanOfRatios;
  // When non-empty, iteration i uses fixed_profiles[i % size] and only the
  // arrivals (and any unknown k or noise) are random.
  std::vector<WeightProfile> fixed_profiles;

  // Throws std::invalid_argument (or std::out_of_range for k) on violations.
  void Validate() const;
  // Waiting time for a known k (or the fixed tau).
  double TauFor(std::optional<int> k) const;
};

struct RatioEstimate {
  double mean = 0.0;       // per the configured estimator
  double std_error = 0.0;  // of `mean`
  int iterations = 0;
  double select_best_prob = 0.0;
  double none_prob = 0.0;
  double mean_of_ratios = 0.0;
  double ratio_of_means = 0.0;
};

// Runs the configured experiment. Results are bit-identical for a fixed
// master seed whatever the thread count.
RatioEstimate EstimateRatio(const ExperimentConfig& config);

// L-selection ratio against OPT = sum of the top L weights. The gap fed is
// sigma * (w_L - w_{L+1}) unless config.gap.absolute is set, which then
// also permits L = n.
RatioEstimate EstimateLSelection(
    ExperimentConfig config, int l,
    std::optional<WeightProfile> fixed_profile = std::nullopt);

struct SweepRow {
  std::optional<int> k;
  double sigma = 0.0;
  AlgorithmConfig algorithm;
  double tau = 0.0;
  RatioEstimate estimate;
};

// One row per (k, algorithm), followed for each k by a classical baseline
// row at tau = 1/e. The baseline ignores k, so it is computed once.
std::vector<SweepRow> SweepK(const ExperimentConfig& config,
                             std::span<const int> ks,
                             std::span<const AlgorithmConfig> algorithms);

// One row per (k, sigma, algorithm).
std::vector<SweepRow> SweepSigma(const ExperimentConfig& config,
                                 std::span<const double> sigmas,
                                 std::span<const int> ks,
                                 std::span<const AlgorithmConfig> algorithms);

// Exact expected accepted weight by enumerating which elements arrive before
// tau (and, for the robust rule, before 1 - gamma) and their arrival order.
// Requires n <= 6. Throws std::invalid_argument otherwise.
double ExactExpectationSmallN(const WeightProfile& profile,
                              const SingleSelectionParams& params);

inline constexpr int kMaxEnumerationN = 6;

}  // namespace secgap

#endif  // SECGAP_MONTECARLO_H_
