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

#include "tc3/model.h"

#include <cmath>
#include <string>

namespace tc3 {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kPreconditionViolated: return "PreconditionViolated";
    case ErrorKind::kSearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::kStrictSizeUnderflow: return "StrictSizeUnderflow";
    case ErrorKind::kStrictBoundMissed: return "StrictBoundMissed";
    case ErrorKind::kReservoirExhausted: return "ReservoirExhausted";
    case ErrorKind::kCliqueNotFound: return "CliqueNotFound";
    case ErrorKind::kBudgetExceeded: return "BudgetExceeded";
    case ErrorKind::kFormat: return "FormatError";
    case ErrorKind::kInternal: return "InternalError";
  }
  return "Unknown";
}

std::array<Vertex, 3> colex_unrank(std::uint64_t rank) {
  // Largest k with C(k,3) <= rank, starting from the real cube root.
  auto k = static_cast<std::uint64_t>(std::cbrt(6.0L * rank));
  while (k > 2 && choose3(k) > rank) --k;
  while (choose3(k + 1) <= rank) ++k;
  rank -= choose3(k);
  auto j = static_cast<std::uint64_t>(std::sqrt(2.0L * rank));
  while (j > 1 && choose2(j) > rank) --j;
  while (choose2(j + 1) <= rank) ++j;
  rank -= choose2(j);
  return {static_cast<Vertex>(rank), static_cast<Vertex>(j),
          static_cast<Vertex>(k)};
}

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
  for (std::size_t i = 1; i < ids_.size(); ++i) {
    if (ids_[i - 1] >= ids_[i]) {
      fail(ErrorKind::kInvalidArgument,
           "vertex set must be strictly increasing");
    }
  }
}

VertexSet VertexSet::range(Vertex first, Vertex count) {
  std::vector<Vertex> ids(count);
  for (Vertex i = 0; i < count; ++i) ids[i] = first + i;
  VertexSet out;
  out.ids_ = std::move(ids);
  return out;
}

VertexSet VertexSet::from_unsorted(std::vector<Vertex> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  VertexSet out;
  out.ids_ = std::move(ids);
  return out;
}

bool VertexSet::disjoint_from(const VertexSet& other) const {
  auto a = ids_.begin();
  auto b = other.ids_.begin();
  while (a != ids_.end() && b != other.ids_.end()) {
    if (*a == *b) return false;
    if (*a < *b) ++a; else ++b;
  }
  return true;
}

VertexSet VertexSet::prefix(std::size_t count) const {
  VertexSet out;
  out.ids_.assign(ids_.begin(),
                  ids_.begin() + static_cast<std::ptrdiff_t>(
                                     std::min(count, ids_.size())));
  return out;
}

VertexSet VertexSet::select(std::span<const std::uint32_t> positions) const {
  std::vector<Vertex> ids;
  ids.reserve(positions.size());
  for (auto p : positions) ids.push_back(ids_.at(p));
  return VertexSet(std::move(ids));
}

// ---------------------------------------------------------------------------
// PackedColors

PackedColors::PackedColors(std::uint64_t count, int n_colors)
    : count_(count),
      bits_(std::max(1, bits_for(static_cast<std::uint64_t>(n_colors)))),
      per_word_(64 / static_cast<std::uint64_t>(bits_)),
      mask_((std::uint64_t{1} << bits_) - 1),
      words_((count + per_word_ - 1) / per_word_, 0) {}

// ---------------------------------------------------------------------------
// TripleColoring

namespace {

void check_palette(Vertex n_vertices, int n_colors) {
  if (n_colors < 1 || n_colors > kMaxColors) {
    fail(ErrorKind::kInvalidArgument,
         "number of colors must lie in [1, 16], got " +
             std::to_string(n_colors));
  }
  (void)n_vertices;
}

}  // namespace

TripleColoring TripleColoring::explicit_coloring(Vertex n_vertices,
                                                 int n_colors,
                                                 PackedColors colors) {
  check_palette(n_vertices, n_colors);
  if (colors.size() != choose3(n_vertices)) {
    fail(ErrorKind::kInvalidArgument,
         "explicit coloring needs exactly C(N,3) entries");
  }
  for (std::uint64_t r = 0; r < colors.size(); ++r) {
    if (colors.get(r) >= n_colors) {
      fail(ErrorKind::kInvalidArgument,
           "explicit color out of range at rank " + std::to_string(r));
    }
  }
  return TripleColoring(n_vertices, n_colors, std::move(colors));
}

TripleColoring TripleColoring::implicit_coloring(const GeneratorSpec& spec,
                                                 Vertex n_vertices,
                                                 int n_colors) {
  check_palette(n_vertices, n_colors);
  spec.validate(n_vertices, n_colors);
  return TripleColoring(n_vertices, n_colors,
                        ImplicitGenerator(spec, n_vertices, n_colors));
}

const GeneratorSpec* TripleColoring::generator_spec() const {
  const auto* gen = generator();
  return gen ? &gen->spec() : nullptr;
}

const ImplicitGenerator* TripleColoring::generator() const {
  return std::get_if<ImplicitGenerator>(&backing_);
}

const PackedColors* TripleColoring::packed() const {
  return std::get_if<PackedColors>(&backing_);
}

ColorId TripleColoring::color_of(Vertex i, Vertex j, Vertex k) const {
  if (i >= n_vertices_ || j >= n_vertices_ || k >= n_vertices_) {
    fail(ErrorKind::kInvalidArgument, "vertex out of range");
  }
  if (i == j || j == k || i == k) {
    fail(ErrorKind::kInvalidArgument, "repeated vertex in triple");
  }
  return ColorId(color_any(i, j, k));
}

TripleColoring TripleColoring::materialize() const {
  if (is_explicit()) return *this;
  PackedColors colors(choose3(n_vertices_), n_colors_);
  std::uint64_t rank = 0;
  for (Vertex k = 2; k < n_vertices_; ++k) {
    for (Vertex j = 1; j < k; ++j) {
      for (Vertex i = 0; i < j; ++i) colors.set(rank++, color_sorted(i, j, k));
    }
  }
  return TripleColoring(n_vertices_, n_colors_, std::move(colors));
}

TripleColoring TripleColoring::with_recolored(Vertex i, Vertex j, Vertex k,
                                              int color) const {
  color_of(i, j, k);  // range checks
  if (color < 0 || color >= n_colors_) {
    fail(ErrorKind::kInvalidArgument, "color out of range");
  }
  TripleColoring copy = materialize();
  std::array<Vertex, 3> t{i, j, k};
  std::sort(t.begin(), t.end());
  std::get<PackedColors>(copy.backing_).set(colex_rank(t[0], t[1], t[2]),
                                            color);
  return copy;
}

// ---------------------------------------------------------------------------
// ColorCensus

ColorId ColorCensus::majority() const {
  std::size_t best = 0;
  for (std::size_t c = 1; c < counts.size(); ++c) {
    if (counts[c] > counts[best]) best = c;
  }
  return ColorId(static_cast<int>(best));
}

ColorCensus color_census(const TripleColoring& coloring, const VertexSet& s) {
  if (!s.all_below(coloring.num_vertices())) {
    fail(ErrorKind::kInvalidArgument, "subset exceeds the vertex range");
  }
  ColorCensus census;
  census.counts.assign(static_cast<std::size_t>(coloring.num_colors()), 0);
  const auto ids = s.ids();
  for (std::size_t c = 2; c < ids.size(); ++c) {
    for (std::size_t b = 1; b < c; ++b) {
      for (std::size_t a = 0; a < b; ++a) {
        ++census.counts[static_cast<std::size_t>(
            coloring.color_sorted(ids[a], ids[b], ids[c]))];
      }
    }
  }
  census.total = choose3(ids.size());
  return census;
}

std::uint64_t min_count_for_density(std::uint64_t total, double epsilon) {
  const long double need =
      (1.0L - static_cast<long double>(epsilon)) * static_cast<long double>(total);
  if (need <= 0) return 0;
  return static_cast<std::uint64_t>(std::ceil(need - 1e-9L));
}

// ---------------------------------------------------------------------------
// SimpleGraph

SimpleGraph::SimpleGraph(VertexSet universe)
    : universe_(std::move(universe)),
      words_per_row_((universe_.size() + 63) / 64),
      bits_(universe_.size() * words_per_row_, 0) {}

SimpleGraph SimpleGraph::complete(VertexSet universe) {
  SimpleGraph g(std::move(universe));
  const std::size_t n = g.order();
  for (std::size_t u = 0; u < n; ++u) {
    std::uint64_t* r = g.mutable_row(u);
    for (std::size_t w = 0; w < g.words_per_row_; ++w) r[w] = ~std::uint64_t{0};
    if (n % 64 != 0) r[g.words_per_row_ - 1] = (std::uint64_t{1} << (n % 64)) - 1;
    r[u >> 6] &= ~(std::uint64_t{1} << (u & 63));
  }
  g.edge_count_ = choose2(n);
  return g;
}

std::size_t SimpleGraph::degree(std::size_t u) const {
  std::size_t d = 0;
  for (std::uint64_t w : row(u)) d += static_cast<std::size_t>(__builtin_popcountll(w));
  return d;
}

void SimpleGraph::add_edge(std::size_t u, std::size_t v) {
  if (u == v || u >= order() || v >= order()) {
    fail(ErrorKind::kInvalidArgument, "bad edge");
  }
  if (adjacent(u, v)) return;
  mutable_row(u)[v >> 6] |= std::uint64_t{1} << (v & 63);
  mutable_row(v)[u >> 6] |= std::uint64_t{1} << (u & 63);
  ++edge_count_;
}

void SimpleGraph::remove_edge(std::size_t u, std::size_t v) {
  if (u >= order() || v >= order() || !adjacent(u, v)) return;
  mutable_row(u)[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  mutable_row(v)[u >> 6] &= ~(std::uint64_t{1} << (u & 63));
  --edge_count_;
}

bool SimpleGraph::is_consistent() const {
  std::uint64_t twice = 0;
  for (std::size_t u = 0; u < order(); ++u) {
    if (adjacent(u, u)) return false;
    for (std::size_t v = 0; v < order(); ++v) {
      if (adjacent(u, v) != adjacent(v, u)) return false;
    }
    twice += degree(u);
  }
  return twice == 2 * edge_count_;
}

}  // namespace tc3
