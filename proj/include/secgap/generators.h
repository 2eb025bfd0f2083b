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

#ifndef SECGAP_GENERATORS_H_
#define SECGAP_GENERATORS_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "secgap/core.h"
#include "secgap/rng.h"

namespace secgap {

enum class FamilyTag { kParetoPower, kExponential, kChiSquared, kExpSuperstar };

// How to read Pareto(5/n, 1) when drawing the Pareto-power scale theta.
enum class ParetoReading {
  kScaleShape,  // scale x_m = 5/n, shape 1: theta = (5/n) / U
  kShapeScale,  // shape 5/n, scale 1: theta = U^(-n/5)
};

struct InstanceFamily {
  FamilyTag tag = FamilyTag::kExponential;
  int df = 10;                    // chi-squared degrees of freedom
  double superstar_factor = 100;  // superstar weight / max of the others
  ParetoReading pareto_reading = ParetoReading::kScaleShape;

  // Throws std::invalid_argument for df < 1 or factor <= 0.
  void Validate() const;
  std::string_view name() const;

  static InstanceFamily Pareto() { return {.tag = FamilyTag::kParetoPower}; }
  static InstanceFamily Exponential() { return {.tag = FamilyTag::kExponential}; }
  static InstanceFamily ChiSquared(int df = 10) {
    return {.tag = FamilyTag::kChiSquared, .df = df};
  }
  static InstanceFamily ExpSuperstar(double factor = 100) {
    return {.tag = FamilyTag::kExpSuperstar, .superstar_factor = factor};
  }
};

// CLI spellings: pareto, exp, chisq, exp-superstar.
InstanceFamily ParseFamily(std::string_view name);

// n i.i.d. Uniform[0,1) arrival times. Throws std::invalid_argument for n < 1.
ArrivalDraw GenArrivals(int n, SeededRng& rng);
// Same draws as GenArrivals, written into `times` (size n).
void FillArrivals(std::vector<double>& times, int n, SeededRng& rng);

// theta ~ Pareto, Y_i ~ Unif[0, theta], w_i = Y_i^(n^1.5), built in log space
// and returned normalized. Requires n >= 2.
WeightProfile GenParetoPower(int n, SeededRng& rng,
                             ParetoReading reading = ParetoReading::kScaleShape);
// w_i ~ Exp(1).
WeightProfile GenExponential(int n, SeededRng& rng);
// w_i = sum of df squared standard normals.
WeightProfile GenChiSquared(int n, int df, SeededRng& rng);
// n - 1 Exp(1) draws plus one element equal to factor * their maximum, placed
// last. Requires n >= 2.
WeightProfile GenExpSuperstar(int n, double factor, SeededRng& rng);

// Dispatch on the family tag. Only the Pareto family comes back normalized.
WeightProfile Generate(const InstanceFamily& family, int n, SeededRng& rng);

// Plain-text replay file: a header line
//   # secgap-profiles family=<name> seed=<seed>
// followed by one profile per line as comma-separated log-weights.
struct ProfileFile {
  std::string family;
  uint64_t seed = 0;
  std::vector<WeightProfile> profiles;
};

void WriteProfiles(std::ostream& out, const ProfileFile& file);
// Throws std::invalid_argument on a malformed file.
ProfileFile ReadProfiles(std::istream& in);

}  // namespace secgap

#endif  // SECGAP_GENERATORS_H_
