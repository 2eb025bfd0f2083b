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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

#include "secgap/bounds.h"
#include "secgap/rng.h"

namespace secgap {
namespace {

// Iterations per work item. Partial sums are combined in block order, so the
// block size (not the thread count) fixes the floating-point summation order.
constexpr int kBlockSize = 1024;

bool UsesGap(Algorithm a) {
  return a != Algorithm::kClassical && a != Algorithm::kStrictClassical;
}

struct Accumulator {
  double ratio_sum = 0;
  double ratio_sq_sum = 0;
  double alg_sum = 0;
  double alg_sq_sum = 0;
  double opt_sum = 0;
  double opt_sq_sum = 0;
  double cross_sum = 0;
  long best = 0;
  long none = 0;

  // `alg` and `opt` are in raw (pre-normalization) units.
  void Add(double alg, double opt, bool best_hit, bool nothing) {
    const double ratio = opt > 0 ? alg / opt : 1.0;  // all-zero: any pick is optimal
    ratio_sum += ratio;
    ratio_sq_sum += ratio * ratio;
    alg_sum += alg;
    alg_sq_sum += alg * alg;
    opt_sum += opt;
    opt_sq_sum += opt * opt;
    cross_sum += alg * opt;
    best += best_hit;
    none += nothing;
  }

  void Merge(const Accumulator& o) {
    ratio_sum += o.ratio_sum;
    ratio_sq_sum += o.ratio_sq_sum;
    alg_sum += o.alg_sum;
    alg_sq_sum += o.alg_sq_sum;
    opt_sum += o.opt_sum;
    opt_sq_sum += o.opt_sq_sum;
    cross_sum += o.cross_sum;
    best += o.best;
    none += o.none;
  }
};

RatioEstimate Finish(const Accumulator& acc, int iterations,
                     Estimator estimator) {
  const double n = iterations;
  RatioEstimate est;
  est.iterations = iterations;
  est.select_best_prob = acc.best / n;
  est.none_prob = acc.none / n;

  est.mean_of_ratios = acc.ratio_sum / n;
  double var = 0.0;
  if (iterations > 1) {
    var = std::max(0.0, (acc.ratio_sq_sum - n * est.mean_of_ratios *
                                                est.mean_of_ratios) /
                            (n - 1));
  }
  const double se_mean = std::sqrt(var / n);

  est.ratio_of_means = acc.opt_sum > 0 ? acc.alg_sum / acc.opt_sum : 1.0;
  double se_ratio = 0.0;
  if (iterations > 1 && acc.opt_sum > 0) {
    // Delta method on sum(A) / sum(M).
    const double r = est.ratio_of_means;
    const double resid = acc.alg_sq_sum - 2 * r * acc.cross_sum +
                         r * r * acc.opt_sq_sum;
    const double mean_opt = acc.opt_sum / n;
    se_ratio = std::sqrt(std::max(0.0, resid / (n - 1)) / n) / mean_opt;
  }

  if (estimator == Estimator::kMeanOfRatios) {
    est.mean = est.mean_of_ratios;
    est.std_error = se_mean;
  } else {
    est.mean = est.ratio_of_means;
    est.std_error = se_ratio;
  }
  return est;
}

// Runs `body(iteration, accumulator)` for every iteration, in blocks spread
// over `threads` workers, and merges the block results in order.
template <typename Body>
Accumulator RunBlocks(int iterations, int threads, Body body) {
  const int blocks = (iterations + kBlockSize - 1) / kBlockSize;
  std::vector<Accumulator> partial(blocks);
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (int b; (b = next.fetch_add(1)) < blocks && !failed;) {
      try {
        const int end = std::min(iterations, (b + 1) * kBlockSize);
        for (int i = b * kBlockSize; i < end; ++i) body(i, partial[b]);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (int t = 1; t < std::min(threads, blocks); ++t) {
      pool.emplace_back(worker);
    }
    worker();
  }
  if (error) std::rethrow_exception(error);
  Accumulator total;
  for (const Accumulator& p : partial) total.Merge(p);
  return total;
}

struct Instance {
  std::optional<WeightProfile> generated;
  const WeightProfile* fixed;
  double raw_max;

  const WeightProfile& profile() const {
    return generated ? *generated : *fixed;
  }
};

Instance DrawInstance(const ExperimentConfig& config, int iteration,
                      SeededRng& rng) {
  if (!config.fixed_profiles.empty()) {
    const WeightProfile& p =
        config.fixed_profiles[iteration % config.fixed_profiles.size()];
    return {std::nullopt, &p, p.max_weight()};
  }
  WeightProfile raw = Generate(config.family, config.n, rng);
  const double raw_max = raw.max_weight();
  return {raw.Normalized(), nullptr, raw_max};
}

double Predict(const GapSpec& gap, double true_gap, SeededRng& rng) {
  double c = gap.absolute ? *gap.absolute : gap.sigma * true_gap;
  if (gap.noise > 0) {
    c += gap.noise * (2.0 * rng.Uniform() - 1.0);
  }
  return std::max(c, 0.0);
}

int EffectiveN(const ExperimentConfig& config) {
  return config.fixed_profiles.empty() ? config.n
                                       : config.fixed_profiles.front().size();
}

}  // namespace

double ExperimentConfig::TauFor(std::optional<int> k) const {
  switch (algorithm.tau_policy) {
    case TauPolicy::kFixed:
      return algorithm.tau;
    case TauPolicy::kFromK:
    case TauPolicy::kMin:
      if (!k) {
        throw std::invalid_argument(
            "tau policy from-k/min needs a known k; pass --tau when k is "
            "unknown");
      }
      return algorithm.tau_policy == TauPolicy::kFromK
                 ? TauForK(*k)
                 : std::min(algorithm.tau, TauForK(*k));
  }
  return algorithm.tau;
}

void ExperimentConfig::Validate() const {
  if (iterations < 1) throw std::invalid_argument("iterations must be >= 1");
  if (threads < 1) throw std::invalid_argument("threads must be >= 1");
  family.Validate();
  int n_eff = n;
  if (!fixed_profiles.empty()) {
    n_eff = fixed_profiles.front().size();
    for (const auto& p : fixed_profiles) {
      if (p.size() != n_eff) {
        throw std::invalid_argument("fixed profiles must share one n");
      }
    }
  } else {
    const int min_n = family.tag == FamilyTag::kParetoPower ||
                              family.tag == FamilyTag::kExpSuperstar
                          ? 2
                          : 1;
    if (n < min_n) {
      throw std::invalid_argument("n must be >= " + std::to_string(min_n) +
                                  " for family " + std::string(family.name()));
    }
  }
  if (!(gap.sigma >= 0.0)) throw std::invalid_argument("sigma must be >= 0");
  if (!(gap.noise >= 0.0)) throw std::invalid_argument("noise must be >= 0");
  if (gap.absolute && !(*gap.absolute >= 0.0)) {
    throw std::invalid_argument("gap override must be >= 0");
  }

  const Algorithm algo = algorithm.algorithm;
  const bool needs_k =
      algorithm.tau_policy != TauPolicy::kFixed ||
      (UsesGap(algo) && algo != Algorithm::kLSelection && !gap.absolute);
  if (needs_k && gap.k && (*gap.k < 2 || *gap.k > n_eff)) {
    throw std::out_of_range("k must lie in [2, n]");
  }
  if (needs_k && !gap.k && n_eff < 2) {
    throw std::invalid_argument("unknown k needs n >= 2");
  }
  const double tau = TauFor(gap.k);
  ValidateTau(tau);
  if (algorithm.tau_policy == TauPolicy::kMin) ValidateTau(algorithm.tau);
  if (algo == Algorithm::kRobustConsistent) PolicySchedule(tau, algorithm.gamma);
  if (!(algorithm.epsilon >= 0.0)) {
    throw std::invalid_argument("epsilon must be >= 0");
  }
  if (algo == Algorithm::kLSelection) {
    const int max_l = gap.absolute ? n_eff : n_eff - 1;
    if (algorithm.l < 1 || algorithm.l > max_l) {
      throw std::out_of_range(
          gap.absolute ? "L must lie in [1, n]"
                       : "L must lie in [1, n-1] when the gap w_L - w_{L+1} "
                         "is computed from the instance");
    }
  }
}

RatioEstimate EstimateRatio(const ExperimentConfig& config) {
  config.Validate();
  const AlgorithmConfig& algo = config.algorithm;
  const int n = EffectiveN(config);

  if (algo.algorithm == Algorithm::kLSelection) {
    const int l = algo.l;
    const double tau = config.TauFor(config.gap.k);
    Accumulator acc = RunBlocks(
        config.iterations, config.threads, [&](int i, Accumulator& out) {
          SeededRng rng(config.master_seed, i);
          const Instance inst = DrawInstance(config, i, rng);
          const WeightProfile& p = inst.profile();
          const ArrivalDraw arrivals = GenArrivals(n, rng);
          double opt = 0.0;
          for (int r = 0; r < l; ++r) opt += p.sorted_weight(r);
          const double true_gap =
              l < n ? p.sorted_weight(l - 1) - p.sorted_weight(l) : 0.0;
          const double c = Predict(config.gap, true_gap, rng);
          const MultiSelectionOutcome res =
              RunLSelectionGap(p, arrivals, tau, c, l);
          bool best = false;
          for (const auto& a : res.accepted) {
            best = best || a.weight >= p.max_weight();
          }
          // Scale both to raw units so ratio-of-means is meaningful.
          const double scale = inst.raw_max / p.max_weight();
          out.Add(res.total_weight() * scale, opt * scale, best,
                  res.accepted.empty());
        });
    return Finish(acc, config.iterations, config.estimator);
  }

  const bool uses_gap = UsesGap(algo.algorithm);
  Accumulator acc = RunBlocks(
      config.iterations, config.threads, [&](int i, Accumulator& out) {
        SeededRng rng(config.master_seed, i);
        const Instance inst = DrawInstance(config, i, rng);
        const WeightProfile& p = inst.profile();
        const ArrivalDraw arrivals = GenArrivals(n, rng);
        std::optional<int> k = config.gap.k;
        SingleSelectionParams params{.algorithm = algo.algorithm,
                                     .gamma = algo.gamma,
                                     .epsilon = algo.epsilon};
        if (uses_gap) {
          if (!k && !config.gap.absolute) {
            k = std::uniform_int_distribution<int>(2, n)(rng);
          }
          const double true_gap = config.gap.absolute ? 0.0 : TrueGap(p, *k);
          params.gap = Predict(config.gap, true_gap, rng);
        }
        params.tau = config.TauFor(k);
        const SelectionOutcome res = RunSingleSelection(p, arrivals, params);
        const double max_w = p.max_weight();
        const double scale = max_w > 0 ? inst.raw_max / max_w : 1.0;
        out.Add(res.accepted_weight * scale, max_w * scale,
                res.accepted() && res.accepted_weight >= max_w,
                !res.accepted());
      });
  return Finish(acc, config.iterations, config.estimator);
}

RatioEstimate EstimateLSelection(ExperimentConfig config, int l,
                                 std::optional<WeightProfile> fixed_profile) {
  if (l < 2) throw std::out_of_range("L must be >= 2");
  config.algorithm.algorithm = Algorithm::kLSelection;
  config.algorithm.l = l;
  if (fixed_profile) config.fixed_profiles = {*fixed_profile};
  return EstimateRatio(config);
}

std::vector<SweepRow> SweepK(const ExperimentConfig& config,
                             std::span<const int> ks,
                             std::span<const AlgorithmConfig> algorithms) {
  if (ks.empty() || algorithms.empty()) {
    throw std::invalid_argument("k and algorithm lists must be non-empty");
  }
  const int n = EffectiveN(config);
  for (int k : ks) {
    if (k < 2 || k > n) throw std::out_of_range("k must lie in [2, n]");
  }

  ExperimentConfig baseline = config;
  baseline.algorithm = AlgorithmConfig{.algorithm = Algorithm::kClassical,
                                       .tau = 1.0 / std::numbers::e};
  const RatioEstimate classical = EstimateRatio(baseline);

  std::vector<SweepRow> rows;
  for (int k : ks) {
    for (const AlgorithmConfig& algo : algorithms) {
      ExperimentConfig cell = config;
      cell.gap.k = k;
      cell.algorithm = algo;
      rows.push_back({k, cell.gap.sigma, algo, cell.TauFor(k),
                      EstimateRatio(cell)});
    }
    rows.push_back({k, config.gap.sigma, baseline.algorithm,
                    baseline.algorithm.tau, classical});
  }
  return rows;
}

std::vector<SweepRow> SweepSigma(const ExperimentConfig& config,
                                 std::span<const double> sigmas,
                                 std::span<const int> ks,
                                 std::span<const AlgorithmConfig> algorithms) {
  if (sigmas.empty() || ks.empty() || algorithms.empty()) {
    throw std::invalid_argument("sigma, k and algorithm lists must be non-empty");
  }
  std::vector<SweepRow> rows;
  for (int k : ks) {
    for (double sigma : sigmas) {
      if (!(sigma >= 0.0)) throw std::invalid_argument("sigma must be >= 0");
      for (const AlgorithmConfig& algo : algorithms) {
        ExperimentConfig cell = config;
        cell.gap.k = k;
        cell.gap.sigma = sigma;
        cell.algorithm = algo;
        rows.push_back({k, sigma, algo, cell.TauFor(k), EstimateRatio(cell)});
      }
    }
  }
  return rows;
}

namespace {

// Weight of the first element of `seq[begin, end)` that clears `threshold`,
// or -1 when none does.
double FirstClearing(const WeightProfile& profile, const std::vector<int>& seq,
                     size_t begin, size_t end, double threshold, bool strict) {
  for (size_t p = begin; p < end; ++p) {
    const double w = profile.weight(seq[p]);
    if (strict ? w > threshold : w >= threshold) return w;
  }
  return -1.0;
}

}  // namespace

double ExactExpectationSmallN(const WeightProfile& profile,
                              const SingleSelectionParams& params) {
  const int n = profile.size();
  if (n > kMaxEnumerationN) {
    throw std::invalid_argument("exact enumeration supports n <= 6");
  }
  params.Validate();
  const double tau = params.tau;
  const bool strict = params.algorithm == Algorithm::kStrictClassical;
  const bool three_phase = params.algorithm == Algorithm::kRobustConsistent;
  double gap = 0.0;
  if (params.algorithm == Algorithm::kExactGap ||
      params.algorithm == Algorithm::kRobustConsistent) {
    gap = params.gap;
  } else if (params.algorithm == Algorithm::kBoundedError) {
    gap = std::max(params.gap - params.epsilon, 0.0);
  }
  const double middle = 1.0 - params.gamma - tau;  // robust only
  const double late = params.gamma;

  auto factorial = [](int m) {
    double f = 1.0;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
  };

  double expectation = 0.0;
  double total_prob = 0.0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    double bsf = 0.0;
    std::vector<int> rest;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        bsf = std::max(bsf, profile.weight(i));
      } else {
        rest.push_back(i);
      }
    }
    const int s = n - static_cast<int>(rest.size());
    const int m = static_cast<int>(rest.size());
    const double p_wait = std::pow(tau, s);
    const double high = std::max(bsf, gap);
    do {
      if (!three_phase) {
        // Each ordering of the post-tau elements is equally likely.
        const double prob = p_wait * std::pow(1.0 - tau, m) / factorial(m);
        const double w = FirstClearing(profile, rest, 0, m, high, strict);
        total_prob += prob;
        if (w >= 0) expectation += prob * w;
        continue;
      }
      // The first j elements of the ordering land in (tau, 1 - gamma], the
      // remaining m - j in (1 - gamma, 1].
      for (int j = 0; j <= m; ++j) {
        const double prob = p_wait * std::pow(middle, j) / factorial(j) *
                            std::pow(late, m - j) / factorial(m - j);
        total_prob += prob;
        double w = FirstClearing(profile, rest, 0, j, high, false);
        if (w < 0) w = FirstClearing(profile, rest, j, m, bsf, false);
        if (w >= 0) expectation += prob * w;
      }
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  if (std::abs(total_prob - 1.0) > 1e-9) {
    throw std::logic_error("enumeration probabilities do not sum to 1");
  }
  return expectation;
}

}  // namespace secgap
