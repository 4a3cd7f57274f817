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

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "tc3/combinatorics.h"
#include "tc3/philox.h"

namespace tc3 {

class TripleColoring;

enum class GeneratorName { kUniform, kConstant, kBlockmix };

std::string_view generator_name(GeneratorName name);
GeneratorName parse_generator_name(std::string_view text);

// Names a seeded coloring family. Serializes as
//   gen=<name> seed=<u64> params=<key:val,...>
// with params in ascending key order, so equal specs print identically.
struct GeneratorSpec {
  GeneratorName name = GeneratorName::kUniform;
  std::uint64_t seed = 0;
  std::map<std::string, std::uint64_t> params;

  // Throws kInvalidArgument when params are missing, unknown or out of range
  // for the given palette and vertex count.
  void validate(Vertex n_vertices, int n_colors) const;

  std::string params_string() const;
  std::string to_string() const;
  static GeneratorSpec parse(std::string_view text);

  friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

// Philox streams. Each generator draws from its own streams so two families
// with the same seed never share randomness.
inline constexpr std::uint32_t kStreamUniform = 0;
inline constexpr std::uint32_t kStreamBlockPermutation = 1;
inline constexpr std::uint32_t kStreamBlockmixColor = 2;
inline constexpr std::uint32_t kStreamSubsetSampling = 3;

// Keyed pseudorandom permutation of [0, domain) built from a balanced
// four-round Feistel network with cycle walking.
class KeyedPermutation {
 public:
  KeyedPermutation(std::uint64_t seed, std::uint64_t domain,
                   std::uint32_t stream);
  std::uint64_t operator()(std::uint64_t x) const;
  std::uint64_t domain() const { return domain_; }

 private:
  std::uint64_t feistel(std::uint64_t x) const;

  Philox4x32 rng_;
  std::uint64_t domain_;
  std::uint32_t stream_;
  int half_bits_;
  std::uint64_t half_mask_;
};

// Evaluates an implicit coloring. Construction precomputes whatever the
// family needs (the block table for blockmix); evaluation is pure.
class ImplicitGenerator {
 public:
  ImplicitGenerator(GeneratorSpec spec, Vertex n_vertices, int n_colors);

  const GeneratorSpec& spec() const { return spec_; }

  // Color of the sorted triple i < j < k.
  int evaluate(Vertex i, Vertex j, Vertex k) const {
    switch (spec_.name) {
      case GeneratorName::kConstant:
        return constant_color_;
      case GeneratorName::kUniform:
        return static_cast<int>(
            keyed_uniform(rng_, colex_rank(i, j, k), kStreamUniform,
                          static_cast<std::uint64_t>(n_colors_)));
      case GeneratorName::kBlockmix:
        return evaluate_blockmix(i, j, k);
    }
    return 0;
  }

  // Block of a vertex under blockmix; 0 for the other families.
  std::uint32_t block_of(Vertex v) const;

 private:
  int evaluate_blockmix(Vertex i, Vertex j, Vertex k) const {
    const auto& blocks = *blocks_;
    if (blocks[i] == blocks[j] && blocks[j] == blocks[k]) return 0;
    return static_cast<int>(keyed_uniform(rng_, colex_rank(i, j, k),
                                          kStreamBlockmixColor,
                                          static_cast<std::uint64_t>(n_colors_)));
  }

  GeneratorSpec spec_;
  int n_colors_;
  int constant_color_ = 0;
  Philox4x32 rng_;
  std::shared_ptr<const std::vector<std::uint32_t>> blocks_;
};

TripleColoring gen_uniform(Vertex n_vertices, int n_colors, std::uint64_t seed);
TripleColoring gen_constant(Vertex n_vertices, int n_colors, int color);
TripleColoring gen_blockmix(Vertex n_vertices, int n_colors, std::uint64_t seed,
                            std::uint64_t blocks);
TripleColoring make_generated(const GeneratorSpec& spec, Vertex n_vertices,
                              int n_colors);

}  // namespace tc3
