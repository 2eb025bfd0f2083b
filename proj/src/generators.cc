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

#include "secgap/generators.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace secgap {
namespace {

void CheckN(int n, int min_n) {
  if (n < min_n) {
    throw std::invalid_argument("n must be >= " + std::to_string(min_n));
  }
}

std::string FormatDouble(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void InstanceFamily::Validate() const {
  if (tag == FamilyTag::kChiSquared && df < 1) {
    throw std::invalid_argument("chi-squared df must be >= 1");
  }
  if (tag == FamilyTag::kExpSuperstar && !(superstar_factor > 0.0)) {
    throw std::invalid_argument("superstar factor must be > 0");
  }
}

std::string_view InstanceFamily::name() const {
  switch (tag) {
    case FamilyTag::kParetoPower:
      return "pareto";
    case FamilyTag::kExponential:
      return "exp";
    case FamilyTag::kChiSquared:
      return "chisq";
    case FamilyTag::kExpSuperstar:
      return "exp-superstar";
  }
  return "unknown";
}

InstanceFamily ParseFamily(std::string_view name) {
  if (name == "pareto") return InstanceFamily::Pareto();
  if (name == "exp") return InstanceFamily::Exponential();
  if (name == "chisq") return InstanceFamily::ChiSquared();
  if (name == "exp-superstar") return InstanceFamily::ExpSuperstar();
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

void FillArrivals(std::vector<double>& times, int n, SeededRng& rng) {
  CheckN(n, 1);
  times.resize(n);
  for (double& t : times) t = rng.Uniform();
}

ArrivalDraw GenArrivals(int n, SeededRng& rng) {
  std::vector<double> times;
  FillArrivals(times, n, rng);
  return ArrivalDraw(std::move(times));
}

WeightProfile GenParetoPower(int n, SeededRng& rng, ParetoReading reading) {
  CheckN(n, 2);
  const double scale = 5.0 / n;
  const double log_u = std::log(rng.UniformPositive());
  const double log_theta = reading == ParetoReading::kScaleShape
                               ? std::log(scale) - log_u
                               : -log_u / scale;
  const double power = std::pow(static_cast<double>(n), 1.5);
  std::vector<double> logs(n);
  for (double& lw : logs) {
    // log(0) = -inf for the measure-zero draw Y_i = 0.
    lw = power * (log_theta + std::log(rng.Uniform()));
  }
  const double top = *std::max_element(logs.begin(), logs.end());
  if (top > -HUGE_VAL) {
    for (double& lw : logs) lw -= top;
  }
  return WeightProfile::FromLogWeights(std::move(logs));
}

WeightProfile GenExponential(int n, SeededRng& rng) {
  CheckN(n, 1);
  std::exponential_distribution<double> exp1(1.0);
  std::vector<double> w(n);
  for (double& x : w) x = exp1(rng);
  return WeightProfile::FromWeights(w);
}

WeightProfile GenChiSquared(int n, int df, SeededRng& rng) {
  CheckN(n, 1);
  if (df < 1) throw std::invalid_argument("chi-squared df must be >= 1");
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> w(n, 0.0);
  for (double& x : w) {
    for (int j = 0; j < df; ++j) {
      const double z = normal(rng);
      x += z * z;
    }
  }
  return WeightProfile::FromWeights(w);
}

WeightProfile GenExpSuperstar(int n, double factor, SeededRng& rng) {
  CheckN(n, 2);
  if (!(factor > 0.0)) {
    throw std::invalid_argument("superstar factor must be > 0");
  }
  std::exponential_distribution<double> exp1(1.0);
  std::vector<double> w(n);
  double max_w = 0.0;
  for (int i = 0; i < n - 1; ++i) {
    w[i] = exp1(rng);
    max_w = std::max(max_w, w[i]);
  }
  w[n - 1] = factor * max_w;
  return WeightProfile::FromWeights(w);
}

WeightProfile Generate(const InstanceFamily& family, int n, SeededRng& rng) {
  switch (family.tag) {
    case FamilyTag::kParetoPower:
      return GenParetoPower(n, rng, family.pareto_reading);
    case FamilyTag::kExponential:
      return GenExponential(n, rng);
    case FamilyTag::kChiSquared:
      return GenChiSquared(n, family.df, rng);
    case FamilyTag::kExpSuperstar:
      return GenExpSuperstar(n, family.superstar_factor, rng);
  }
  throw std::invalid_argument("unknown family tag");
}

void WriteProfiles(std::ostream& out, const ProfileFile& file) {
  out << "# secgap-profiles family=" << file.family << " seed=" << file.seed
      << "\n";
  for (const WeightProfile& p : file.profiles) {
    for (int i = 0; i < p.size(); ++i) {
      if (i > 0) out << ',';
      out << FormatDouble(p.log_weight(i));
    }
    out << "\n";
  }
}

ProfileFile ReadProfiles(std::istream& in) {
  ProfileFile file;
  std::string line;
  if (!std::getline(in, line) || line.rfind("# secgap-profiles", 0) != 0) {
    throw std::invalid_argument("missing '# secgap-profiles' header");
  }
  std::istringstream header(line.substr(17));
  for (std::string field; header >> field;) {
    if (field.rfind("family=", 0) == 0) {
      file.family = field.substr(7);
    } else if (field.rfind("seed=", 0) == 0) {
      file.seed = std::stoull(field.substr(5));
    }
  }
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<double> logs;
    std::istringstream row(line);
    for (std::string cell; std::getline(row, cell, ',');) {
      char* end = nullptr;
      const double v = std::strtod(cell.c_str(), &end);
      if (end == cell.c_str() || *end != '\0') {
        throw std::invalid_argument("bad log-weight '" + cell + "'");
      }
      logs.push_back(v);
    }
    file.profiles.push_back(WeightProfile::FromLogWeights(std::move(logs)));
  }
  return file;
}

}  // namespace secgap
