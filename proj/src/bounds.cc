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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace secgap {
namespace {

void CheckK(int k) {
  if (k < 2) throw std::invalid_argument("k must be >= 2");
}

void CheckOpenTau(double tau) {
  if (!(tau > 0.0 && tau < 1.0)) {
    throw std::invalid_argument("tau must lie in (0,1)");
  }
}

// Closed upper end: the bound formulas are continuous at gamma = 1 - tau,
// where the robust-consistent rule degenerates to the classical one.
void CheckGamma(double tau, double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0 - tau)) {
    throw std::invalid_argument("gamma must lie in [0, 1 - tau]");
  }
}

// 3/2 tau ln(1/tau) - 1/2 tau (1 - tau)
double Alpha4(double tau) {
  return 1.5 * tau * std::log(1.0 / tau) - 0.5 * tau * (1.0 - tau);
}

std::string ArgMax(const std::string& a, double va, const std::string& b,
                   double vb) {
  return va >= vb ? a : b;
}

std::string ArgMin(const std::string& a, double va, const std::string& b,
                   double vb) {
  return va <= vb ? a : b;
}

}  // namespace

double GuaranteeReport::component(const std::string& name) const {
  for (const auto& [n, v] : components) {
    if (n == name) return v;
  }
  throw std::out_of_range("no component named " + name);
}

double GuaranteeReport::LowerBound(double w1, double epsilon) const {
  return alpha * w1 - epsilon_penalty * epsilon;
}

KAggregation KAggregation::Fixed(int k) {
  CheckK(k);
  return KAggregation(k, k);
}

KAggregation KAggregation::WorstCase(int k_max) {
  CheckK(k_max);
  return KAggregation(std::nullopt, k_max);
}

std::string KAggregation::ToString() const {
  if (worst_case()) return "worst-case(k<=" + std::to_string(k_max_) + "+inf)";
  return "k=" + std::to_string(*k_);
}

double TauForK(int k) {
  CheckK(k);
  return 1.0 - std::pow(1.0 / (k + 1.0), 1.0 / k);
}

GuaranteeReport AlphaExact(double tau, int k) {
  CheckOpenTau(tau);
  CheckK(k);
  const double case1 = (1.0 - tau) * k / (2.0 * (k - 1.0));
  const double case2_i = Alpha3(tau, k);
  const double case2_ii = Alpha4(tau);
  const double inner = std::max(case2_i, case2_ii);

  GuaranteeReport report;
  report.alpha = std::min(case1, inner);
  report.components = {
      {"case1", case1}, {"case2_i", case2_i}, {"case2_ii", case2_ii}};
  report.binding_term = case1 <= inner
                            ? "case1"
                            : ArgMax("case2_i", case2_i, "case2_ii", case2_ii);
  return report;
}

double GuaranteeExactGap(int k) {
  CheckK(k);
  return std::max(0.4, 0.5 * std::pow(1.0 / (k + 1.0), 1.0 / k));
}

double Robustness(double tau, double gamma) {
  if (!(tau >= 0.0 && tau < 1.0)) {
    throw std::invalid_argument("tau must lie in [0,1)");
  }
  CheckGamma(tau, gamma);
  return tau * std::log(1.0 / (1.0 - gamma));
}

double Alpha3(double tau, int k) {
  return (k + 1.0) / (2.0 * k) * (1.0 - tau - std::pow(1.0 - tau, k + 1));
}

std::pair<double, int> Alpha3Infimum(double tau, int k_max) {
  double best = (1.0 - tau) / 2.0;
  int arg = 0;
  for (int k = 2; k <= k_max; ++k) {
    const double v = Alpha3(tau, k);
    if (v < best) {
      best = v;
      arg = k;
    }
  }
  return {best, arg};
}

namespace {

GuaranteeReport ComposeConsistency(double tau, double gamma, double alpha3) {
  const double log_late = std::log(1.0 / (1.0 - gamma));
  const double a1 = 1.0 - gamma - tau + tau * log_late;
  const double a2 = 0.5 * ((1.0 + gamma) * (1.0 - tau - gamma) +
                           tau * std::log(1.0 / tau) + tau * log_late);
  const double a4 = Alpha4(tau);
  const double lower = std::min(a1, a2);
  const double upper = std::max(alpha3, a4);

  GuaranteeReport report;
  report.alpha = std::min(lower, upper);
  report.components = {
      {"alpha1", a1}, {"alpha2", a2}, {"alpha3", alpha3}, {"alpha4", a4}};
  report.binding_term = lower <= upper
                            ? ArgMin("alpha1", a1, "alpha2", a2)
                            : ArgMax("alpha3", alpha3, "alpha4", a4);
  return report;
}

}  // namespace

GuaranteeReport Consistency(double tau, double gamma,
                            KAggregation aggregation) {
  CheckOpenTau(tau);
  CheckGamma(tau, gamma);
  const double alpha3 = aggregation.worst_case()
                            ? Alpha3Infimum(tau, aggregation.k_max()).first
                            : Alpha3(tau, aggregation.k());
  return ComposeConsistency(tau, gamma, alpha3);
}

std::vector<FrontierPoint> Frontier(std::span<const double> robustness_targets,
                                    double grid_step, KAggregation aggregation,
                                    int threads) {
  if (robustness_targets.empty()) {
    throw std::invalid_argument("frontier needs at least one target");
  }
  if (!(grid_step > 0.0 && grid_step <= 0.1)) {
    throw std::invalid_argument("grid step must lie in (0, 0.1]");
  }
  for (double r : robustness_targets) {
    if (!(r >= 0.0)) {
      throw std::invalid_argument("robustness targets must be >= 0");
    }
  }

  // When the step divides 1 the grid is i / m, which reproduces decimal
  // literals such as 0.2 and 0.6 exactly.
  const double cells = 1.0 / grid_step;
  const long m = std::lround(cells);
  const bool exact = std::abs(cells - m) < 1e-9;
  auto coord = [&](long i) {
    return exact ? static_cast<double>(i) / m : i * grid_step;
  };
  std::vector<double> taus;
  for (long i = 1; coord(i) < 1.0; ++i) taus.push_back(coord(i));

  struct Cell {
    double gamma;
    double robustness;
    double consistency;
  };
  std::vector<std::vector<Cell>> columns(taus.size());
  auto fill = [&](size_t c) {
    const double tau = taus[c];
    const double alpha3 = aggregation.worst_case()
                              ? Alpha3Infimum(tau, aggregation.k_max()).first
                              : Alpha3(tau, aggregation.k());
    for (long j = 0;; ++j) {
      const double gamma = coord(j);
      if (!(gamma < 1.0 - tau)) break;
      columns[c].push_back({gamma, tau * std::log(1.0 / (1.0 - gamma)),
                            ComposeConsistency(tau, gamma, alpha3).alpha});
    }
  };

  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t c; (c = next.fetch_add(1)) < taus.size();) fill(c);
  };
  std::vector<std::jthread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  std::vector<FrontierPoint> out;
  for (double target : robustness_targets) {
    FrontierPoint best{.robustness_target = target};
    for (size_t c = 0; c < taus.size(); ++c) {
      for (const Cell& cell : columns[c]) {
        if (cell.robustness < target) continue;
        if (!best.feasible || cell.consistency > best.consistency) {
          best.feasible = true;
          best.tau = taus[c];
          best.gamma = cell.gamma;
          best.consistency = cell.consistency;
          best.robustness = cell.robustness;
        }
      }
    }
    out.push_back(best);
  }
  return out;
}

GuaranteeReport GuaranteeBoundedError(double tau, int k) {
  GuaranteeReport report = AlphaExact(tau, k);
  report.epsilon_penalty = 2.0;
  return report;
}

double TwoThreeTieProb(double tau) {
  if (!(tau > 0.0 && tau <= 1.0)) {
    throw std::invalid_argument("tau must lie in (0,1]");
  }
  return 0.5 * tau * (1.0 - tau) * (1.0 - tau) + tau * std::log(1.0 / tau);
}

double TwoThreeTieProbExact(double tau, int n) {
  if (!(tau > 0.0 && tau <= 1.0)) {
    throw std::invalid_argument("tau must lie in (0,1]");
  }
  if (n < 3) throw std::invalid_argument("n must be >= 3");
  double sum = 0.5 * tau * (1.0 - tau) * (1.0 - tau);
  double power = 1.0;
  for (int i = 1; i <= n - 1; ++i) {
    power *= 1.0 - tau;
    sum += tau * power / i;
  }
  return sum + std::pow(1.0 - tau, n) / n;
}

double LSelectionBound(int l, double beta) {
  if (l < 2) throw std::invalid_argument("L must be >= 2");
  if (!(beta >= 0.0 && beta <= 1.0 / l)) {
    throw std::invalid_argument("beta must lie in [0, 1/L]");
  }
  using std::numbers::e;
  return 1.0 / e +
         beta / (2.0 * e) * (1.0 - 1.0 / l + 1.0 / (l * std::exp(l)));
}

}  // namespace secgap
