// Copyright 2026 The Authors.
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

// All randomness in the project flows through these helpers so that every
// experiment is reproducible bit-for-bit from a single u64 seed.  The
// generator is std::mt19937_64 (output sequence fixed by the standard);
// derived streams use SplitMix64; doubles take the top 53 bits; shuffles
// are Fisher-Yates with modulo-reduced draws.  None of the
// implementation-defined <random> distributions are used.

#ifndef MAXTOUR_RNG_HPP_
#define MAXTOUR_RNG_HPP_

#include <cstdint>
#include <random>
#include <vector>

namespace maxtour {

// SplitMix64 step; used to derive independent sub-seeds from a master seed.
inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline uint64_t derive_seed(uint64_t master, uint64_t tag) {
  return splitmix64(master ^ splitmix64(tag));
}

class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1): top 53 bits of the draw.
  double next_double01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // Uniform in [0, n); modulo reduction (bias is irrelevant here, the fixed
  // mapping is what matters for reproducibility).
  uint64_t next_below(uint64_t n) { return gen_() % n; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(next_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace maxtour

#endif  // MAXTOUR_RNG_HPP_
