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

#ifndef SECGAP_RNG_H_
#define SECGAP_RNG_H_

#include <cstdint>
#include <limits>

namespace secgap {

// SplitMix64 output function.
constexpr uint64_t Mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Random stream keyed by (master seed, stream index). The stream for
// iteration i depends on nothing else, so work can be split across threads
// in any order. Models UniformRandomBitGenerator.
class SeededRng {
 public:
  using result_type = uint64_t;

  SeededRng(uint64_t master_seed, uint64_t stream)
      : master_seed_(master_seed),
        stream_(stream),
        state_(Mix64(master_seed ^ Mix64(stream + kGolden))) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() {
    state_ += kGolden;
    return Mix64(state_);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double Uniform() { return ((*this)() >> 11) * 0x1.0p-53; }
  // Uniform double in (0, 1].
  double UniformPositive() { return (((*this)() >> 11) + 1) * 0x1.0p-53; }

  uint64_t master_seed() const { return master_seed_; }
  uint64_t stream() const { return stream_; }

 private:
  static constexpr uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
  uint64_t master_seed_;
  uint64_t stream_;
  uint64_t state_;
};

}  // namespace secgap

#endif  // SECGAP_RNG_H_
