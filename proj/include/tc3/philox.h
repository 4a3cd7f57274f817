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

namespace tc3 {

// Philox4x32-10 counter-based generator (Salmon et al., Random123). A pure
// keyed bijection on 128-bit counters: the same (key, counter) yields the same
// four words on every platform, which is what makes implicit colorings
// reproducible without storage.
class Philox4x32 {
 public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static constexpr std::uint32_t kMul0 = 0xD2511F53u;
  static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

  constexpr explicit Philox4x32(Key key) : key_(key) {}
  constexpr explicit Philox4x32(std::uint64_t seed)
      : key_{static_cast<std::uint32_t>(seed),
             static_cast<std::uint32_t>(seed >> 32)} {}

  constexpr Counter operator()(Counter ctr) const {
    Key key = key_;
    for (int round = 0; round < 10; ++round) {
      if (round > 0) {
        key[0] += kWeyl0;
        key[1] += kWeyl1;
      }
      const std::uint64_t p0 = std::uint64_t{kMul0} * ctr[0];
      const std::uint64_t p1 = std::uint64_t{kMul1} * ctr[2];
      ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
             static_cast<std::uint32_t>(p1),
             static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
             static_cast<std::uint32_t>(p0)};
    }
    return ctr;
  }

  // Counter layout used throughout tc3: a 64-bit index, a stream id
  // separating independent uses, and a retry index for rejection sampling.
  constexpr Counter operator()(std::uint64_t index, std::uint32_t stream,
                               std::uint32_t retry) const {
    return (*this)(Counter{static_cast<std::uint32_t>(index),
                           static_cast<std::uint32_t>(index >> 32), stream,
                           retry});
  }

  constexpr const Key& key() const { return key_; }

 private:
  Key key_;
};

// Number of top bits needed to represent values in [0, bound).
constexpr int bits_for(std::uint64_t bound) {
  int bits = 0;
  while ((std::uint64_t{1} << bits) < bound) ++bits;
  return bits;
}

// Unbiased draw in [0, bound) for 1 <= bound <= 2^32, keyed by (index,
// stream). Takes the top bits_for(bound) bits of each output word and rejects
// values >= bound, moving on to the next word and then the next retry block.
constexpr std::uint32_t keyed_uniform(const Philox4x32& rng,
                                      std::uint64_t index,
                                      std::uint32_t stream,
                                      std::uint64_t bound) {
  if (bound <= 1) return 0;
  const int bits = bits_for(bound);
  for (std::uint32_t retry = 0;; ++retry) {
    const auto words = rng(index, stream, retry);
    for (std::uint32_t w : words) {
      const std::uint64_t v = bits == 32 ? w : (w >> (32 - bits));
      if (v < bound) return static_cast<std::uint32_t>(v);
    }
  }
}

}  // namespace tc3
