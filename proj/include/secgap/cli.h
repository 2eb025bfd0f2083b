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

#ifndef SECGAP_CLI_H_
#define SECGAP_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace secgap::cli {

inline constexpr char kVersion[] = "0.1.0";
inline constexpr int kCsvSchema = 1;

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;

// Stable column order of every simulate/sweep CSV.
inline constexpr char kCsvHeader[] =
    "family,algo,n,iters,k,tau,gamma,sigma,epsilon,L,seed,ratio_mean,"
    "ratio_stderr,select_best_prob,none_prob";

// Runs one command. `args` excludes the program name, e.g.
// {"simulate", "--family", "exp", ...}. Returns the process exit code.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace secgap::cli

#endif  // SECGAP_CLI_H_
