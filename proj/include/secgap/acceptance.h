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

#ifndef SECGAP_ACCEPTANCE_H_
#define SECGAP_ACCEPTANCE_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace secgap::acceptance {

struct Options {
  // Reduced iteration counts; the bands are unchanged.
  bool fast = false;
  int threads = 1;
  uint64_t seed = 20261018;
};

struct CheckResult {
  std::string id;     // "C1" ... "C12", "S1" for supplementary checks
  std::string title;
  bool passed = false;
  std::string measured;
  std::string expected;
  double seconds = 0.0;
};

// Suites: bounds, oracle, figures, determinism, all.
// Throws std::invalid_argument on an unknown suite name.
std::vector<CheckResult> RunSuite(std::string_view suite,
                                  const Options& options);

// One "PASS|FAIL id title: measured (expected) [seconds]" line per check.
void PrintResults(const std::vector<CheckResult>& results, std::ostream& out);

bool AllPassed(const std::vector<CheckResult>& results);

}  // namespace secgap::acceptance

#endif  // SECGAP_ACCEPTANCE_H_
