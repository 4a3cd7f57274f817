// Copyright 2026 The tc3 Authors
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

#include <array>
#include <cstdint>
#include <limits>

namespace tc3 {

using Vertex = std::uint32_t;

inline constexpr std::uint64_t kSaturated =
    std::numeric_limits<std::uint64_t>::max();

// Binomial coefficient, saturating at kSaturated.
constexpr std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(acc);
}

constexpr std::uint64_t choose2(std::uint64_t n) {
  return n < 2 ? 0 : n * (n - 1) / 2;
}

constexpr std::uint64_t choose3(std::uint64_t n) {
  if (n < 3) return 0;
  // n < 2^21 keeps n(n-1)(n-2) inside 64 bits; beyond that go wide.
  const unsigned __int128 p = static_cast<unsigned __int128>(n) * (n - 1) *
                              (n - 2) / 6;
  return static_cast<std::uint64_t>(p);
}

// Colexicographic rank of a sorted triple i < j < k:
//   rank = C(k,3) + C(j,2) + i.
constexpr std::uint64_t colex_rank(Vertex i, Vertex j, Vertex k) {
  return choose3(k) + choose2(j) + i;
}

// Inverse of colex_rank. Returns {i, j, k} with i < j < k.
std::array<Vertex, 3> colex_unrank(std::uint64_t rank);

// Rank of the sorted pair i < j among pairs in colex order.
constexpr std::uint64_t pair_rank(Vertex i, Vertex j) {
  return choose2(j) + i;
}

}  // namespace tc3
