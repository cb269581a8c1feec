// Copyright 2026 The radrq Authors.
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

#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace radrq {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Folds up to four components (master seed, report index, kind, variant)
// into one well-spread engine seed, so per-item streams do not depend on
// iteration order.
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b = 0,
                              std::uint64_t c = 0, std::uint64_t d = 0) {
  std::uint64_t s = splitmix64(a);
  s = splitmix64(s ^ b);
  s = splitmix64(s ^ c);
  s = splitmix64(s ^ d);
  return s;
}

// Unbiased draw in [0, n), n >= 1. Rejection sampling instead of
// std::uniform_int_distribution, whose output is implementation-defined;
// emitted artifacts must be byte-stable across toolchains.
template <class Engine>
std::uint64_t draw_below(Engine& eng, std::uint64_t n) {
  const std::uint64_t rem = (UINT64_MAX % n + 1) % n;  // 2^64 mod n
  std::uint64_t v = eng();
  if (rem != 0) {
    const std::uint64_t limit = UINT64_MAX - rem;  // largest accepted value
    while (v > limit) v = eng();
  }
  return v % n;
}

// First k positions of a seeded partial shuffle of [0, n), in selection
// order.
template <class Engine>
std::vector<std::size_t> sample_without_replacement(Engine& eng, std::size_t n,
                                                    std::size_t k) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  if (k > n) k = n;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j =
        i + static_cast<std::size_t>(draw_below(eng, static_cast<std::uint64_t>(n - i)));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(k);
  return idx;
}

}  // namespace radrq
