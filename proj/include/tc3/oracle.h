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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tc3/model.h"

namespace tc3 {

struct OracleBudget {
  std::uint64_t max_subsets = std::uint64_t{1} << 20;
  double time_limit_seconds = 60.0;

  void validate() const;
};

struct AlmostMonoWitness {
  std::size_t size = 0;
  VertexSet subset;
  ColorCensus census;
  ColorId color;  // the color meeting the threshold (census majority)
};

// Largest s such that some s-subset has a color on at least (1-eps)C(s,3)
// of its triples, with the lexicographically least witness of that size.
// Walks sizes from N downwards, each level in revolving-door order with
// incremental census updates, and stops at the first qualifying level.
// Throws kBudgetExceeded when 2^N exceeds the subset budget or time runs out.
AlmostMonoWitness brute_max_almost_mono(const TripleColoring& coloring,
                                        double epsilon,
                                        const OracleBudget& budget = {});

// Second, independent route to the same answer: one pass over all 2^N
// subsets in reflected Gray-code order, toggling one vertex at a time.
AlmostMonoWitness brute_max_almost_mono_gray(const TripleColoring& coloring,
                                             double epsilon,
                                             const OracleBudget& budget = {});

// Pair coloring of K_m stored by colex pair rank.
struct PairColoring {
  int order = 0;
  int n_colors = 0;
  std::vector<std::uint8_t> colors;

  int at(int i, int j) const;  // i != j
};

bool has_mono_clique(const PairColoring& coloring, int k);

struct R2Exact {
  int value = 0;             // least m forcing a monochromatic K_k
  PairColoring witness;      // a coloring of K_{value-1} avoiding one
  std::uint64_t nodes = 0;   // search nodes visited
};

// Exhaustive search over pair colorings of K_m for m = 0, 1, ..., with colors
// introduced in order of first use. Throws kBudgetExceeded when the node
// count passes budget.max_subsets or time runs out.
R2Exact r2_exact_small(int k, int n_colors, const OracleBudget& budget = {});

// Exact graph Ramsey values established by r2_exact_small. Text form, one
// entry per line:
//   r2 k=<int> l=<int> value=<int> proof=exhaustive seed-independent
class R2Table {
 public:
  void insert(int k, int n_colors, std::uint64_t value);
  const std::uint64_t* find(int k, int n_colors) const;
  std::size_t size() const { return entries_.size(); }

  std::string serialize() const;
  static R2Table parse(std::string_view text);

  // Table computed once per process by r2_exact_small: k <= 2 for every
  // palette, k <= 6 for a single color, and (3, 2).
  static const R2Table& verified();

 private:
  std::map<std::pair<int, int>, std::uint64_t> entries_;
};

struct R2Bound {
  std::uint64_t value = 0;
  bool exact = false;      // taken from the verified table
  bool saturated = false;  // l^(k l) overflowed 64 bits
};

// Exact value when the table covers (k, l), else l^(k l).
R2Bound r2_upper_bound(int k, int n_colors);
R2Bound r2_upper_bound(int k, int n_colors, const R2Table& table);

}  // namespace tc3
