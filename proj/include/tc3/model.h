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

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <variant>
#include <vector>

#include "tc3/combinatorics.h"
#include "tc3/errors.h"
#include "tc3/generators.h"

namespace tc3 {

inline constexpr int kMaxColors = 16;

struct ColorId {
  std::uint8_t value = 0;

  constexpr ColorId() = default;
  constexpr explicit ColorId(int v) : value(static_cast<std::uint8_t>(v)) {}
  constexpr int index() const { return value; }

  friend constexpr auto operator<=>(ColorId, ColorId) = default;
};

// Sorted set of distinct vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  // Throws kInvalidArgument unless `ids` is strictly increasing.
  explicit VertexSet(std::vector<Vertex> ids);
  VertexSet(std::initializer_list<Vertex> ids)
      : VertexSet(std::vector<Vertex>(ids)) {}

  // Builds [first, first + count).
  static VertexSet range(Vertex first, Vertex count);
  // Sorts and deduplicates.
  static VertexSet from_unsorted(std::vector<Vertex> ids);

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  Vertex operator[](std::size_t i) const { return ids_[i]; }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  std::span<const Vertex> ids() const { return ids_; }
  const std::vector<Vertex>& vector() const { return ids_; }

  bool contains(Vertex v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
  }
  bool all_below(Vertex bound) const {
    return ids_.empty() || ids_.back() < bound;
  }
  bool disjoint_from(const VertexSet& other) const;
  VertexSet prefix(std::size_t count) const;
  // Elements at the given (strictly increasing) positions.
  VertexSet select(std::span<const std::uint32_t> positions) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) {
    return a.ids_ <=> b.ids_;
  }

 private:
  std::vector<Vertex> ids_;
};

// Colors packed at ceil(log2 l) bits (at least one) per triple, indexed by
// colex rank. Entries never straddle a 64-bit word.
class PackedColors {
 public:
  PackedColors() = default;
  PackedColors(std::uint64_t count, int n_colors);

  std::uint64_t size() const { return count_; }
  int bits_per_color() const { return bits_; }

  int get(std::uint64_t rank) const {
    const std::uint64_t word = words_[rank / per_word_];
    const int shift = static_cast<int>(rank % per_word_) * bits_;
    return static_cast<int>((word >> shift) & mask_);
  }
  void set(std::uint64_t rank, int color) {
    std::uint64_t& word = words_[rank / per_word_];
    const int shift = static_cast<int>(rank % per_word_) * bits_;
    word = (word & ~(mask_ << shift)) |
           ((static_cast<std::uint64_t>(color) & mask_) << shift);
  }

  friend bool operator==(const PackedColors&, const PackedColors&) = default;

 private:
  std::uint64_t count_ = 0;
  int bits_ = 1;
  std::uint64_t per_word_ = 64;
  std::uint64_t mask_ = 1;
  std::vector<std::uint64_t> words_;
};

// An l-coloring of all triples of {0..N-1}. Immutable once built; either
// stores every color explicitly or evaluates a seeded generator on demand.
class TripleColoring {
 public:
  // Explicit coloring; `colors` must hold exactly C(N,3) entries.
  static TripleColoring explicit_coloring(Vertex n_vertices, int n_colors,
                                          PackedColors colors);
  static TripleColoring implicit_coloring(const GeneratorSpec& spec,
                                          Vertex n_vertices, int n_colors);

  Vertex num_vertices() const { return n_vertices_; }
  int num_colors() const { return n_colors_; }
  bool is_explicit() const {
    return std::holds_alternative<PackedColors>(backing_);
  }
  // Null for explicit colorings.
  const GeneratorSpec* generator_spec() const;
  const ImplicitGenerator* generator() const;
  // Null for implicit colorings.
  const PackedColors* packed() const;

  // Checked, order-insensitive lookup. Throws kInvalidArgument on an
  // out-of-range or repeated vertex.
  ColorId color_of(Vertex i, Vertex j, Vertex k) const;

  // Hot path: i < j < k < N, unchecked.
  int color_sorted(Vertex i, Vertex j, Vertex k) const {
    if (const auto* gen = std::get_if<ImplicitGenerator>(&backing_)) {
      return gen->evaluate(i, j, k);
    }
    return std::get<PackedColors>(backing_).get(colex_rank(i, j, k));
  }
  // Unchecked, any order of three distinct vertices.
  int color_any(Vertex a, Vertex b, Vertex c) const {
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
    return color_sorted(a, b, c);
  }

  // Explicit copy of this coloring (identity for explicit ones).
  TripleColoring materialize() const;
  // Copy of an explicit coloring with one triple recolored.
  TripleColoring with_recolored(Vertex i, Vertex j, Vertex k, int color) const;

 private:
  TripleColoring(Vertex n_vertices, int n_colors,
                 std::variant<PackedColors, ImplicitGenerator> backing)
      : n_vertices_(n_vertices),
        n_colors_(n_colors),
        backing_(std::move(backing)) {}

  Vertex n_vertices_;
  int n_colors_;
  std::variant<PackedColors, ImplicitGenerator> backing_;
};

// Per-color triple counts over a vertex subset.
struct ColorCensus {
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;

  // Most frequent color, ties to the smallest id.
  ColorId majority() const;
  double fraction(ColorId c) const {
    return total == 0 ? 0.0
                      : static_cast<double>(counts[c.index()]) /
                            static_cast<double>(total);
  }

  friend bool operator==(const ColorCensus&, const ColorCensus&) = default;
};

ColorCensus color_census(const TripleColoring& coloring, const VertexSet& s);

// Smallest integer count m with m >= (1 - epsilon) * total, with a small
// tolerance so that decimal epsilons such as 0.1 do not round the wrong way.
std::uint64_t min_count_for_density(std::uint64_t total, double epsilon);

// Simple undirected graph over a universe of vertex ids, stored as a bitset
// adjacency matrix in local (position) indices.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(VertexSet universe);
  static SimpleGraph complete(VertexSet universe);

  const VertexSet& universe() const { return universe_; }
  std::size_t order() const { return universe_.size(); }
  std::uint64_t edge_count() const { return edge_count_; }
  std::size_t words_per_row() const { return words_per_row_; }

  // Local-index accessors.
  bool adjacent(std::size_t u, std::size_t v) const {
    return (row(u)[v >> 6] >> (v & 63)) & 1u;
  }
  std::span<const std::uint64_t> row(std::size_t u) const {
    return {bits_.data() + u * words_per_row_, words_per_row_};
  }
  std::size_t degree(std::size_t u) const;

  void add_edge(std::size_t u, std::size_t v);
  void remove_edge(std::size_t u, std::size_t v);

  // Calls f(u, v) for every edge u < v in row-major order.
  template <typename F>
  void for_each_edge(F&& f) const {
    for (std::size_t u = 0; u < order(); ++u) {
      const auto r = row(u);
      for (std::size_t w = (u + 1) >> 6; w < words_per_row_; ++w) {
        std::uint64_t word = r[w];
        if (w == ((u + 1) >> 6)) word &= ~std::uint64_t{0} << ((u + 1) & 63);
        while (word != 0) {
          const std::size_t v = (w << 6) + static_cast<std::size_t>(
                                               __builtin_ctzll(word));
          word &= word - 1;
          f(u, v);
        }
      }
    }
  }

  // Keeps only the edges for which keep(u, v) is true.
  // Visiting only u < v means clearing an edge never disturbs the iteration.
  template <typename Pred>
  void retain_edges(Pred&& keep) {
    for_each_edge([&](std::size_t u, std::size_t v) {
      if (!keep(u, v)) remove_edge(u, v);
    });
  }

  // Checks symmetry, irreflexivity and the cached edge count.
  bool is_consistent() const;

 private:
  std::uint64_t* mutable_row(std::size_t u) {
    return bits_.data() + u * words_per_row_;
  }

  VertexSet universe_;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> bits_;
  std::uint64_t edge_count_ = 0;
};

}  // namespace tc3
