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

#include "secgap/acceptance.h"

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "secgap/algorithms.h"
#include "secgap/bounds.h"
#include "secgap/cli.h"
#include "secgap/core.h"
#include "secgap/generators.h"
#include "secgap/montecarlo.h"
#include "secgap/rng.h"

namespace secgap::acceptance {
namespace {

constexpr double kInvE = 1.0 / std::numbers::e;

std::string Fmt(const char* format, auto... values) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), format, values...);
  return buf;
}

class Stopwatch {
 public:
  double Seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

ExperimentConfig BaseConfig(const Options& o, InstanceFamily family, int n,
                            int iterations) {
  ExperimentConfig c;
  c.family = family;
  c.n = n;
  c.iterations = iterations;
  c.master_seed = o.seed;
  c.threads = o.threads;
  return c;
}

RatioEstimate Estimate(ExperimentConfig c, Algorithm algorithm, double tau,
                       std::optional<int> k, double sigma,
                       double gamma = 0.0) {
  c.algorithm = {.algorithm = algorithm, .tau = tau, .gamma = gamma};
  c.gap.k = k;
  c.gap.sigma = sigma;
  return EstimateRatio(c);
}

// --- closed-form checks ---------------------------------------------------

CheckResult CheckFixedTauGuarantee() {
  Stopwatch sw;
  double worst = 1.0;
  int arg = 0;
  for (int k = 2; k <= 1000000; ++k) {
    const double a = AlphaExact(0.2, k).alpha;
    if (a < worst) {
      worst = a;
      arg = k;
    }
  }
  const double secs = sw.Seconds();
  return {.id = "C1",
          .title = "alpha_exact(0.2, k) over k in [2, 1e6]",
          .passed = worst >= 0.4 && secs < 10.0,
          .measured = Fmt("min %.12f at k=%d", worst, arg),
          .expected = ">= 0.4 in < 10 s",
          .seconds = secs};
}

CheckResult CheckTauForKGuarantee() {
  Stopwatch sw;
  double slack = 1.0;
  int arg = 0;
  for (int k = 2; k <= 100000; ++k) {
    const double a = AlphaExact(TauForK(k), k).alpha;
    const double floor =
        std::max(0.4, 0.5 * std::pow(1.0 / (k + 1), 1.0 / k));
    if (a - floor < slack) {
      slack = a - floor;
      arg = k;
    }
  }
  const double first7 = AlphaExact(TauForK(7), 7).component("case1");
  const double secs = sw.Seconds();
  return {.id = "C2",
          .title = "alpha_exact(tau_for_k(k), k) over k in [2, 1e5]",
          .passed = slack >= -1e-12 && std::abs(first7 - 0.433) <= 0.001 &&
                    secs < 5.0,
          .measured = Fmt("min slack %.3e at k=%d; first term at k=7 %.6f",
                          slack, arg, first7),
          .expected = "slack >= -1e-12; 0.433 +- 0.001; < 5 s",
          .seconds = secs};
}

CheckResult CheckRobustConsistentPoint() {
  Stopwatch sw;
  const double cons = Consistency(0.2, 0.6).alpha;
  const double rob = Robustness(0.2, 0.6);
  const double classic = Robustness(kInvE, 1.0 - kInvE);
  return {.id = "C3",
          .title = "robust-consistent point (0.2, 0.6) and gamma = 1 - 1/e",
          .passed = std::abs(cons - 0.383) <= 0.001 &&
                    std::abs(rob - 0.1833) <= 0.0005 &&
                    std::abs(classic - kInvE) <= 1e-12,
          .measured = Fmt("consistency %.6f robustness %.6f limit %.15f", cons,
                          rob, classic),
          .expected = "0.383 +- 0.001, 0.1833 +- 0.0005, 1/e +- 1e-12",
          .seconds = sw.Seconds()};
}

CheckResult CheckFrontierShape() {
  Stopwatch sw;
  const double r = Robustness(0.2, 0.6);
  const double cons = Consistency(0.2, 0.6).alpha;
  const std::vector<double> point = {r};
  const FrontierPoint at = Frontier(point, 0.001).front();
  std::vector<double> targets;
  for (int i = 0; i <= 37; ++i) targets.push_back(0.01 * i);
  const auto curve = Frontier(targets, 0.005);
  bool monotone = true;
  int feasible = 0;
  for (size_t i = 0; i < curve.size(); ++i) {
    feasible += curve[i].feasible;
    if (i > 0 && curve[i].feasible &&
        curve[i].consistency > curve[i - 1].consistency) {
      monotone = false;
    }
    if (i > 0 && curve[i].feasible && !curve[i - 1].feasible) monotone = false;
  }
  return {.id = "S1",
          .title = "frontier admits (0.2, 0.6) and is non-increasing",
          .passed = at.feasible && at.consistency >= cons - 1e-12 && monotone,
          .measured = Fmt("consistency %.6f at r=%.4f; %d/%zu targets feasible; "
                          "monotone=%d",
                          at.consistency, r, feasible, curve.size(), monotone),
          .expected = Fmt(">= %.6f; monotone=1", cons),
          .seconds = sw.Seconds()};
}

// --- Monte Carlo versus exact values ---------------------------------------

CheckResult CheckTieProbability(const Options& o) {
  Stopwatch sw;
  const double tau = 0.359;
  const double formula = TwoThreeTieProb(tau);
  const int n = 200;
  std::vector<double> w(n);
  w[0] = 1.0;
  w[1] = w[2] = 0.5;
  for (int i = 3; i < n; ++i) w[i] = 0.4 * (1.0 - static_cast<double>(i) / n);
  ExperimentConfig c =
      BaseConfig(o, InstanceFamily::Exponential(), n, o.fast ? 20000 : 100000);
  c.fixed_profiles = {WeightProfile::FromWeights(w)};
  const RatioEstimate est =
      Estimate(c, Algorithm::kStrictClassical, tau, std::nullopt, 1.0);
  const bool formula_ok = formula >= 0.441 && formula <= 0.443;
  const bool mc_ok = std::abs(est.select_best_prob - formula) <= 0.01;
  return {.id = "C4",
          .title = "tie w2 = w3 selection probability, formula and simulation",
          .passed = formula_ok && mc_ok,
          .measured = Fmt("formula %.6f; simulated %.6f over %d iterations",
                          formula, est.select_best_prob, c.iterations),
          .expected = "formula in [0.441, 0.443]; simulated within 0.01",
          .seconds = sw.Seconds()};
}

SingleSelectionParams RandomParams(Algorithm algorithm,
                                   const WeightProfile& p, SeededRng& rng) {
  const int n = p.size();
  SingleSelectionParams q{.algorithm = algorithm};
  q.tau = 0.1 + 0.4 * rng.Uniform();
  const int k = std::uniform_int_distribution<int>(2, n)(rng);
  const double gap = TrueGap(p, k);
  switch (algorithm) {
    case Algorithm::kExactGap:
      q.gap = gap;
      break;
    case Algorithm::kBoundedError:
      q.epsilon = 0.1 * p.max_weight();
      q.gap = std::max(0.0, gap + q.epsilon * (2.0 * rng.Uniform() - 1.0));
      break;
    case Algorithm::kRobustConsistent:
      q.gamma = (0.05 + 0.85 * rng.Uniform()) * (1.0 - q.tau);
      q.gap = 2.0 * rng.Uniform() * gap;
      break;
    default:
      break;
  }
  return q;
}

CheckResult CheckEnumerationOracle(const Options& o) {
  Stopwatch sw;
  const double hand = ExactExpectationSmallN(
      WeightProfile::FromWeights(std::vector<double>{2.0, 1.0}),
      {.algorithm = Algorithm::kExactGap, .tau = 0.5, .gap = 0.0});
  const int iterations = o.fast ? 100000 : 1000000;
  const Algorithm algos[] = {Algorithm::kClassical, Algorithm::kStrictClassical,
                             Algorithm::kExactGap, Algorithm::kBoundedError,
                             Algorithm::kRobustConsistent};
  int total = 0, inside = 0, beyond2 = 0;
  double worst_z = 0.0, z_sum = 0.0, z_sq = 0.0;
  std::string worst;
  for (int n = 2; n <= 5; ++n) {
    for (int j = 0; j < 20; ++j) {
      SeededRng rng(o.seed ^ 0x5eed0acULL, static_cast<uint64_t>(n * 1000 + j));
      std::exponential_distribution<double> exp1(1.0);
      std::vector<double> w(n);
      for (double& x : w) x = exp1(rng);
      const WeightProfile p = WeightProfile::FromWeights(w).Normalized();
      for (Algorithm a : algos) {
        const SingleSelectionParams q = RandomParams(a, p, rng);
        const double exact = ExactExpectationSmallN(p, q);
        ExperimentConfig c =
            BaseConfig(o, InstanceFamily::Exponential(), n, iterations);
        c.master_seed = o.seed + static_cast<uint64_t>(total);
        c.fixed_profiles = {p};
        c.algorithm = {.algorithm = a,
                       .tau = q.tau,
                       .gamma = q.gamma,
                       .epsilon = q.epsilon};
        c.gap.absolute = q.gap;
        const RatioEstimate est = EstimateRatio(c);
        const double diff = std::abs(est.mean - exact);
        const bool ok = est.std_error > 0 ? diff <= 3.0 * est.std_error
                                          : diff <= 1e-12;
        const double z = est.std_error > 0 ? diff / est.std_error
                                           : (diff <= 1e-12 ? 0.0 : HUGE_VAL);
        if (est.std_error > 0) {
          const double signed_z = (est.mean - exact) / est.std_error;
          z_sum += signed_z;
          z_sq += signed_z * signed_z;
        }
        beyond2 += z > 2.0;
        if (z >= worst_z) {
          worst_z = z;
          worst = Fmt("n=%d profile=%d %s", n, j,
                      std::string(AlgorithmName(a)).c_str());
        }
        ++total;
        inside += ok;
      }
    }
  }
  const double secs = sw.Seconds();
  return {.id = "C8",
          .title = "simulation matches exact enumeration for n in [2, 5]",
          .passed = inside == total && std::abs(hand - 0.875) <= 1e-12 &&
                    secs < 120.0,
          .measured = Fmt("%d/%d within 3 SE (max |z| %.2f: %s; z mean %.3f "
                          "var %.3f, %d beyond 2 SE); hand value %.15f",
                          inside, total, worst_z, worst.c_str(), z_sum / total,
                          z_sq / total, beyond2, hand),
          .expected = "all within 3 SE; 0.875 +- 1e-12; < 120 s",
          .seconds = secs};
}

CheckResult CheckBoundedError(const Options& o) {
  Stopwatch sw;
  SeededRng rng(o.seed, 0xb0b);
  const WeightProfile p = GenExponential(50, rng).Normalized();
  const double w1 = p.max_weight();
  const double tau = 0.2;
  int total = 0, ok = 0;
  double min_slack = HUGE_VAL;
  for (int k : {2, 25, 50}) {
    const double c = TrueGap(p, k);
    const GuaranteeReport g = GuaranteeBoundedError(tau, k);
    for (double eps : {0.0, 0.05 * w1, 0.2 * w1}) {
      for (double sign : {1.0, -1.0}) {
        if (eps == 0.0 && sign < 0) continue;
        ExperimentConfig cfg = BaseConfig(o, InstanceFamily::Exponential(), 50,
                                          o.fast ? 20000 : 100000);
        cfg.fixed_profiles = {p};
        cfg.algorithm = {.algorithm = Algorithm::kBoundedError,
                         .tau = tau,
                         .epsilon = eps};
        cfg.gap.absolute = std::max(0.0, c + sign * eps);
        const RatioEstimate est = EstimateRatio(cfg);
        const double alg = est.mean * w1;
        const double bound = g.LowerBound(w1, eps) - 3.0 * est.std_error * w1;
        min_slack = std::min(min_slack, alg - bound);
        ok += alg >= bound;
        ++total;
      }
    }
  }
  return {.id = "C10",
          .title = "bounded-error rule keeps alpha*w1 - 2 eps",
          .passed = ok == total,
          .measured = Fmt("%d/%d cases hold; min slack %.4f", ok, total,
                          min_slack),
          .expected = "E[ALG] >= alpha w1 - 2 eps - 3 SE",
          .seconds = sw.Seconds()};
}

CheckResult CheckLSelection(const Options& o) {
  Stopwatch sw;
  const int n = 50;
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) w[i] = std::pow(0.9, i);
  const WeightProfile p = WeightProfile::FromWeights(w);
  int ok = 0;
  std::string detail;
  for (int l : {2, 3, 5}) {
    double opt = 0.0;
    for (int i = 0; i < l; ++i) opt += w[i];
    const double beta = w[l - 1] / opt;
    const double bound = LSelectionBound(l, beta);
    ExperimentConfig c = BaseConfig(o, InstanceFamily::Exponential(), n,
                                    o.fast ? 20000 : 100000);
    c.algorithm.tau = kInvE;
    const RatioEstimate est = EstimateLSelection(c, l, p);
    const bool pass = est.mean >= bound - 3.0 * est.std_error;
    ok += pass;
    detail += Fmt("%sL=%d %.4f vs %.4f", detail.empty() ? "" : "; ", l,
                  est.mean, bound);
  }
  return {.id = "C11",
          .title = "L-selection ratio on a geometric profile",
          .passed = ok == 3,
          .measured = detail,
          .expected = "ratio >= bound(L, w_L/OPT) - 3 SE",
          .seconds = sw.Seconds()};
}

// --- figure-level bands ----------------------------------------------------

int FigureIterations(const Options& o) { return o.fast ? 1000 : 5000; }

CheckResult CheckParetoBands(const Options& o) {
  Stopwatch sw;
  const ExperimentConfig c =
      BaseConfig(o, InstanceFamily::Pareto(), 200, FigureIterations(o));
  const RatioEstimate classical =
      Estimate(c, Algorithm::kClassical, kInvE, std::nullopt, 1.0);
  bool pass = classical.mean >= 0.33 && classical.mean <= 0.41;
  std::string detail = Fmt("classical %.4f", classical.mean);
  for (int k : {2, 50, 100, 200}) {
    const RatioEstimate e = Estimate(c, Algorithm::kExactGap, 0.2, k, 1.0);
    pass = pass && e.mean >= 0.77 && e.mean <= 0.83;
    detail += Fmt("; k=%d %.4f", k, e.mean);
  }
  const double secs = sw.Seconds();
  return {.id = "C5",
          .title = "pareto family: classical vs exact gap",
          .passed = pass && secs < 300.0,
          .measured = detail,
          .expected = "classical in [0.33, 0.41]; exact gap in [0.77, 0.83]",
          .seconds = secs};
}

CheckResult CheckExponentialSigma(const Options& o) {
  Stopwatch sw;
  const ExperimentConfig c =
      BaseConfig(o, InstanceFamily::Exponential(), 200, FigureIterations(o));
  bool pass = true;
  std::string detail;
  for (int k : {2, 100, 200}) {
    const double g = Estimate(c, Algorithm::kExactGap, 0.2, k, 0.3).mean;
    const double r =
        Estimate(c, Algorithm::kRobustConsistent, 0.2, k, 0.3, 0.05).mean;
    pass = pass && std::abs(g - 0.65) <= 0.05 && std::abs(r - 0.65) <= 0.05;
    detail += Fmt("%sk=%d gap %.4f robust %.4f", detail.empty() ? "" : "; ", k,
                  g, r);
  }
  const double g2 = Estimate(c, Algorithm::kExactGap, 0.2, 200, 2.0).mean;
  const double r2 =
      Estimate(c, Algorithm::kRobustConsistent, 0.2, 200, 2.0, 0.05).mean;
  pass = pass && g2 <= 0.05 && r2 >= 0.10;
  detail += Fmt("; sigma=2 k=200 gap %.4f robust %.4f", g2, r2);
  return {.id = "C6",
          .title = "exponential family under scaled predictions",
          .passed = pass,
          .measured = detail,
          .expected = "sigma=0.3: 0.65 +- 0.05; sigma=2: gap <= 0.05, "
                      "robust >= 0.10",
          .seconds = sw.Seconds()};
}

CheckResult CheckSuperstar(const Options& o) {
  Stopwatch sw;
  const ExperimentConfig c =
      BaseConfig(o, InstanceFamily::ExpSuperstar(), 200, FigureIterations(o));
  bool pass = true;
  std::string detail;
  for (int k : {2, 100, 200}) {
    const double g = Estimate(c, Algorithm::kExactGap, 0.2, k, 1.0).mean;
    pass = pass && g >= 0.75;
    detail += Fmt("%sk=%d %.4f", detail.empty() ? "" : "; ", k, g);
  }
  const double g = Estimate(c, Algorithm::kExactGap, 0.2, 200, 1.1).mean;
  const double r =
      Estimate(c, Algorithm::kRobustConsistent, 0.2, 200, 1.1, 0.05).mean;
  pass = pass && g <= 0.01 && r >= 0.005;
  detail += Fmt("; sigma=1.1 gap %.4f robust %.4f", g, r);
  return {.id = "C7",
          .title = "superstar family: exact vs overestimated gap",
          .passed = pass,
          .measured = detail,
          .expected = "sigma=1 >= 0.75; sigma=1.1 gap <= 0.01, robust >= 0.005",
          .seconds = sw.Seconds()};
}

CheckResult CheckGuaranteeProperty(const Options& o) {
  Stopwatch sw;
  bool pass = true;
  std::string detail;
  for (const InstanceFamily& f :
       {InstanceFamily::Exponential(), InstanceFamily::ChiSquared()}) {
    for (int k : {2, 100, 200}) {
      ExperimentConfig c = BaseConfig(o, f, 200, FigureIterations(o));
      c.algorithm = {.algorithm = Algorithm::kExactGap,
                     .tau_policy = TauPolicy::kFromK};
      c.gap.k = k;
      const RatioEstimate e = EstimateRatio(c);
      const double alpha = AlphaExact(TauForK(k), k).alpha;
      pass = pass && e.mean >= alpha - 3.0 * e.std_error;
      detail += Fmt("%s%s k=%d %.4f vs %.4f", detail.empty() ? "" : "; ",
                    std::string(f.name()).c_str(), k, e.mean, alpha);
    }
  }
  return {.id = "C9",
          .title = "simulated ratio clears alpha_exact with tau_for_k",
          .passed = pass,
          .measured = detail,
          .expected = "mean >= alpha - 3 SE",
          .seconds = sw.Seconds()};
}

// --- determinism -----------------------------------------------------------

std::string Slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

CheckResult CheckDeterminism(const Options& o) {
  Stopwatch sw;
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() /
                       ("secgap-determinism-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::string iters = o.fast ? "1500" : "3000";
  const std::string seed = std::to_string(o.seed);
  const std::vector<std::vector<std::string>> commands = {
      {"simulate", "--family", "pareto", "--algo", "classical", "--tau",
       "0.3678794412"},
      {"simulate", "--family", "exp", "--algo", "strict-classical"},
      {"simulate", "--family", "chisq", "--algo", "exact-gap", "--k", "50"},
      {"simulate", "--family", "exp", "--algo", "exact-gap", "--k", "unknown"},
      {"simulate", "--family", "exp-superstar", "--algo", "robust", "--k",
       "100", "--sigma", "1.1"},
      {"simulate", "--family", "exp", "--algo", "bounded", "--epsilon", "0.1",
       "--noise", "0.1"},
      {"simulate", "--family", "exp", "--algo", "l-select", "--L", "3",
       "--tau", "0.3678794412"},
      {"simulate", "--family", "exp", "--algo", "exact-gap", "--k", "20",
       "--tau-policy", "min", "--estimator", "ratio-of-means"},
      {"sweep", "--sweep", "k", "--family", "pareto", "--from", "2", "--to",
       "200", "--step", "99", "--algo", "exact-gap,robust"},
      {"sweep", "--sweep", "sigma", "--family", "exp", "--from", "0", "--to",
       "2", "--step", "0.5", "--k", "2,200", "--algo", "exact-gap,robust"},
  };
  int same = 0;
  std::string mismatch;
  for (size_t i = 0; i < commands.size(); ++i) {
    std::string files[2];
    int codes[2];
    const char* threads[2] = {"1", "8"};
    for (int t = 0; t < 2; ++t) {
      std::vector<std::string> args = commands[i];
      const fs::path out = dir / Fmt("cmd%zu_t%s.csv", i, threads[t]);
      for (const char* extra : {"--n", "200", "--iters"}) args.push_back(extra);
      args.push_back(iters);
      args.insert(args.end(), {"--seed", seed, "--threads", threads[t],
                               "--out", out.string()});
      std::ostringstream sink_out, sink_err;
      codes[t] = cli::Run(args, sink_out, sink_err);
      files[t] = Slurp(out);
    }
    if (codes[0] == 0 && codes[1] == 0 && !files[0].empty() &&
        files[0] == files[1]) {
      ++same;
    } else if (mismatch.empty()) {
      mismatch = Fmt("; first mismatch: command %zu", i);
    }
  }
  std::error_code ec;
  fs::remove_all(dir, ec);
  return {.id = "C12",
          .title = "simulate/sweep CSV identical for 1 and 8 threads",
          .passed = same == static_cast<int>(commands.size()),
          .measured = Fmt("%d/%zu commands byte-identical%s", same,
                          commands.size(), mismatch.c_str()),
          .expected = "all byte-identical",
          .seconds = sw.Seconds()};
}

using Check = std::function<CheckResult(const Options&)>;

std::vector<Check> SuiteChecks(std::string_view suite) {
  const std::vector<Check> bounds = {
      [](const Options&) { return CheckFixedTauGuarantee(); },
      [](const Options&) { return CheckTauForKGuarantee(); },
      [](const Options&) { return CheckRobustConsistentPoint(); },
      [](const Options&) { return CheckFrontierShape(); },
  };
  const std::vector<Check> oracle = {CheckTieProbability,
                                     CheckEnumerationOracle, CheckBoundedError,
                                     CheckLSelection};
  const std::vector<Check> figures = {CheckParetoBands, CheckExponentialSigma,
                                      CheckSuperstar, CheckGuaranteeProperty};
  const std::vector<Check> determinism = {CheckDeterminism};
  if (suite == "bounds") return bounds;
  if (suite == "oracle") return oracle;
  if (suite == "figures") return figures;
  if (suite == "determinism") return determinism;
  if (suite == "all") {
    std::vector<Check> all = bounds;
    for (const auto* s : {&oracle, &figures, &determinism}) {
      all.insert(all.end(), s->begin(), s->end());
    }
    return all;
  }
  throw std::invalid_argument(
      "suite must be one of bounds, oracle, figures, determinism, all");
}

}  // namespace

std::vector<CheckResult> RunSuite(std::string_view suite,
                                  const Options& options) {
  if (options.threads < 1) throw std::invalid_argument("threads must be >= 1");
  std::vector<CheckResult> results;
  for (const Check& check : SuiteChecks(suite)) {
    results.push_back(check(options));
  }
  std::sort(results.begin(), results.end(), [](const auto& a, const auto& b) {
    auto key = [](const std::string& id) {
      return std::make_pair(id[0] == 'S', std::stoi(id.substr(1)));
    };
    return key(a.id) < key(b.id);
  });
  return results;
}

void PrintResults(const std::vector<CheckResult>& results, std::ostream& out) {
  for (const CheckResult& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.id << ' ' << r.title << ": "
        << r.measured << " (expected " << r.expected << ") ["
        << Fmt("%.2f s", r.seconds) << "]\n";
  }
}

bool AllPassed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.passed; });
}

}  // namespace secgap::acceptance
