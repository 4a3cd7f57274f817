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

#include "tc3/engine.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <utility>

#include "tc3/oracle.h"

namespace tc3 {

namespace {

// Absorbs rounding in sqrt(log2 N) before flooring a part size.
constexpr double kFloorSlack = 1e-9;
// Fused majority counting keeps one dense histogram per color.
constexpr std::uint64_t kFusedHistogramCells = std::uint64_t{1} << 22;

std::string str(std::uint64_t v) { return std::to_string(v); }

[[noreturn]] void fail_traced(ErrorKind kind, const std::string& message,
                              const PartitionState& state) {
  throw ExtractionFailure(kind, message, state.trace);
}

// Re-raises library errors as ExtractionFailure carrying the trace so far.
template <typename F>
auto with_trace(const PartitionState& state, F&& f) {
  try {
    return f();
  } catch (const ExtractionFailure&) {
    throw;
  } catch (const Error& e) {
    throw ExtractionFailure(e.kind(), e.what(), state.trace);
  }
}

std::vector<std::uint32_t> mask_positions(Signature mask) {
  std::vector<std::uint32_t> out;
  for (; mask != 0; mask &= mask - 1) {
    out.push_back(static_cast<std::uint32_t>(std::countr_zero(mask)));
  }
  return out;
}

bool is_strict(const PartitionState& state) {
  return state.request.mode == ExtractionMode::kStrict;
}

int adaptive_part_size(const ExtractionRequest& request) {
  return request.initial_part_size > 0 ? request.initial_part_size
                                        : request.n;
}

// N^(1/4 + 2^-i).
double strict_reservoir_bound(Vertex n_vertices, int round) {
  return std::pow(static_cast<double>(n_vertices),
                  0.25 + std::ldexp(1.0, -round));
}

void check_strict_reservoir(PartitionState& state, Vertex n_vertices) {
  auto& record = state.trace.rounds.back();
  record.strict_reservoir_bound =
      strict_reservoir_bound(n_vertices, state.round);
  if (static_cast<double>(state.reservoir.size()) <
      record.strict_reservoir_bound) {
    fail_traced(ErrorKind::kStrictBoundMissed,
                "reservoir " + str(state.reservoir.size()) +
                    " below N^(1/4+2^-" + std::to_string(state.round) + ")",
                state);
  }
}

std::vector<std::size_t> part_sizes(const PartitionState& state) {
  std::vector<std::size_t> sizes;
  for (const auto& p : state.parts) sizes.push_back(p.size());
  return sizes;
}

void check_invariants_or_fail(const TripleColoring& coloring,
                              const PartitionState& state) {
  if (!state.request.check_invariants) return;
  auto v = check_round_invariant(coloring, state);
  if (!v) v = check_step_invariant(coloring, state);
  if (v) {
    fail_traced(ErrorKind::kInternal,
                "invariant violated at triple (" + str(v->triple[0]) + ", " +
                    str(v->triple[1]) + ", " + str(v->triple[2]) + ")",
                state);
  }
}

}  // namespace

std::string_view mode_name(ExtractionMode mode) {
  return mode == ExtractionMode::kStrict ? "strict" : "adaptive";
}

ExtractionMode parse_mode(std::string_view text) {
  if (text == "strict") return ExtractionMode::kStrict;
  if (text == "adaptive") return ExtractionMode::kAdaptive;
  fail(ErrorKind::kInvalidArgument,
       "unknown mode '" + std::string(text) + "' (strict|adaptive)");
}

void ExtractionRequest::validate() const {
  if (d < 3) fail(ErrorKind::kInvalidArgument, "d must be at least 3");
  if (n < 1 || n > kMaxSignatureWidth) {
    fail(ErrorKind::kInvalidArgument, "part size n must lie in [1, 30]");
  }
  if (r_cap != 0 && r_cap < d - 1) {
    fail(ErrorKind::kInvalidArgument, "r_cap must be at least d - 1");
  }
  if (reservoir_cap < 1) {
    fail(ErrorKind::kInvalidArgument, "reservoir_cap must be positive");
  }
  if (initial_part_size != 0 &&
      (initial_part_size < n || initial_part_size > kMaxSignatureWidth)) {
    fail(ErrorKind::kInvalidArgument,
         "initial part size must lie in [n, 30]");
  }
}

// ---------------------------------------------------------------------------
// PairColorMatrix

void PairColorMatrix::set(int a, int b, ColorId c) {
  if (a < 0 || a >= b || b >= order_) {
    fail(ErrorKind::kInvalidArgument, "pair color index out of range");
  }
  auto& row = rows_[static_cast<std::size_t>(b)];
  if (row.size() < static_cast<std::size_t>(b)) row.resize(b, -1);
  row[static_cast<std::size_t>(a)] = static_cast<std::int16_t>(c.index());
}

bool PairColorMatrix::defined(int a, int b) const {
  if (a < 0 || a >= b || b >= order_) return false;
  const auto& row = rows_[static_cast<std::size_t>(b)];
  return static_cast<std::size_t>(a) < row.size() &&
         row[static_cast<std::size_t>(a)] >= 0;
}

ColorId PairColorMatrix::at(int a, int b) const {
  if (!defined(a, b)) {
    fail(ErrorKind::kInvalidArgument, "pair color is not defined");
  }
  return ColorId(rows_[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)]);
}

// ---------------------------------------------------------------------------
// Rounds

std::size_t strict_part_size(double sqrt_log_n, int n_colors, int round) {
  const double size =
      sqrt_log_n / std::pow(static_cast<double>(n_colors), round);
  return static_cast<std::size_t>(std::floor(size + kFloorSlack));
}

PartitionState init_round(const TripleColoring& coloring,
                          const ExtractionRequest& request) {
  request.validate();
  const Vertex n_vertices = coloring.num_vertices();
  if (n_vertices < 3) {
    fail(ErrorKind::kPreconditionViolated, "need at least 3 vertices");
  }
  PartitionState state;
  state.request = request;
  state.n_colors = coloring.num_colors();
  state.sqrt_log_n = std::sqrt(std::log2(static_cast<double>(n_vertices)));

  std::size_t size;
  if (request.mode == ExtractionMode::kStrict) {
    size = strict_part_size(state.sqrt_log_n, state.n_colors, 1);
    if (size == 0) {
      fail_traced(ErrorKind::kStrictSizeUnderflow,
                  "floor(sqrt(log2 N)/l) is 0 for N=" + str(n_vertices) +
                      ", l=" + std::to_string(state.n_colors),
                  state);
    }
  } else {
    size = static_cast<std::size_t>(adaptive_part_size(request));
  }
  if (size + static_cast<std::size_t>(request.n) > n_vertices) {
    fail_traced(ErrorKind::kReservoirExhausted,
                "first part of " + str(size) + " leaves fewer than n=" +
                    std::to_string(request.n) + " reservoir vertices",
                state);
  }
  const auto first = static_cast<Vertex>(size);
  state.parts.push_back(VertexSet::range(0, first));
  state.reservoir = VertexSet::range(
      first, static_cast<Vertex>(std::min<std::size_t>(
                 n_vertices - first, request.reservoir_cap)));
  state.round = 1;
  state.chi.grow();

  RoundRecord record;
  record.round = 1;
  record.part_sizes = part_sizes(state);
  record.reservoir = state.reservoir.size();
  record.new_part_size = static_cast<int>(size);
  state.trace.rounds.push_back(std::move(record));
  if (is_strict(state)) check_strict_reservoir(state, n_vertices);
  return state;
}

PartitionState refine_step(PartitionState state,
                           const TripleColoring& coloring) {
  if (state.step >= state.round) {
    fail(ErrorKind::kPreconditionViolated,
         "every part of this round is already refined");
  }
  if (state.step == 0) {
    state.chi.grow();
    RoundRecord record;
    record.round = state.round + 1;
    state.trace.rounds.push_back(std::move(record));
    if (!state.work_graph) {
      state.work_graph = SimpleGraph::complete(state.reservoir);
    }
  }
  const int j = state.step;
  const VertexSet& part = state.parts[static_cast<std::size_t>(j)];
  SimpleGraph& g = *state.work_graph;
  const std::uint64_t edges_before = g.edge_count();
  if (edges_before == 0) {
    fail_traced(ErrorKind::kReservoirExhausted,
                "work graph of round " + std::to_string(state.round + 1) +
                    " has no edges at step " + std::to_string(j + 1),
                state);
  }

  const int width = static_cast<int>(part.size());
  const int l = state.n_colors;
  const auto& s = g.universe();
  const bool fused = width <= kDenseHistogramMaxWidth &&
                     (static_cast<std::uint64_t>(l) << width) <=
                         kFusedHistogramCells;

  // Majority color over V x E(G), with per-color signature histograms when
  // they fit so that a single pass suffices.
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(l), 0);
  std::vector<SignatureHistogram> hists;
  if (fused) hists.assign(static_cast<std::size_t>(l), SignatureHistogram(width));
  std::vector<Signature> masks(static_cast<std::size_t>(l), 0);
  g.for_each_edge([&](std::size_t u, std::size_t v) {
    for (int p = 0; p < width; ++p) {
      const int c = coloring.color_any(part[static_cast<std::size_t>(p)],
                                       s[u], s[v]);
      masks[static_cast<std::size_t>(c)] |= Signature{1} << p;
    }
    for (int c = 0; c < l; ++c) {
      auto& m = masks[static_cast<std::size_t>(c)];
      counts[static_cast<std::size_t>(c)] +=
          static_cast<std::uint64_t>(std::popcount(m));
      if (fused) hists[static_cast<std::size_t>(c)].add(m);
      m = 0;
    }
  });
  int color = 0;
  for (int c = 1; c < l; ++c) {
    if (counts[static_cast<std::size_t>(c)] >
        counts[static_cast<std::size_t>(color)]) {
      color = c;
    }
  }
  SignatureHistogram hist =
      fused ? std::move(hists[static_cast<std::size_t>(color)])
            : SignatureHistogram(width);
  if (!fused) {
    g.for_each_edge([&](std::size_t u, std::size_t v) {
      Signature m = 0;
      for (int p = 0; p < width; ++p) {
        if (coloring.color_any(part[static_cast<std::size_t>(p)], s[u],
                               s[v]) == color) {
          m |= Signature{1} << p;
        }
      }
      hist.add(m);
    });
  }

  const auto choice = with_trace(state, [&] {
    if (is_strict(state)) return kst_bipartite_choice(hist, l);
    const int a = std::min(width, std::max(state.request.n, width / l));
    return hist.best_subset(a);
  });
  VertexSet refined = part.select(mask_positions(choice.mask));

  if (choice.cover != g.edge_count()) {
    g.retain_edges([&](std::size_t u, std::size_t v) {
      for (Vertex a : refined) {
        if (coloring.color_any(a, s[u], s[v]) != color) return false;
      }
      return true;
    });
  }
  if (g.edge_count() != choice.cover) {
    fail_traced(ErrorKind::kInternal,
                "refined work graph has " + str(g.edge_count()) +
                    " edges, histogram promised " + str(choice.cover),
                state);
  }

  state.chi.set(j, state.round, ColorId(color));
  state.parts[static_cast<std::size_t>(j)] = std::move(refined);
  state.step = j + 1;

  StepRecord step;
  step.round = state.round + 1;
  step.step = state.step;
  step.color = ColorId(color);
  step.color_count = counts[static_cast<std::size_t>(color)];
  step.triple_count = edges_before * static_cast<std::uint64_t>(width);
  step.part_sizes = part_sizes(state);
  step.edges = g.edge_count();
  step.reservoir = state.reservoir.size();
  if (is_strict(state)) {
    const double r = static_cast<double>(state.reservoir.size());
    const double exponent =
        -2.0 - state.step * state.sqrt_log_n /
                   std::pow(static_cast<double>(l), state.round);
    step.strict_edge_bound = std::exp2(exponent) * r * r;
  }
  state.trace.rounds.back().steps.push_back(step);
  if (is_strict(state) &&
      static_cast<double>(step.edges) < step.strict_edge_bound) {
    fail_traced(ErrorKind::kStrictBoundMissed,
                "work graph has " + str(step.edges) +
                    " edges, below the strict bound at step " +
                    std::to_string(state.step),
                state);
  }
  check_invariants_or_fail(coloring, state);
  return state;
}

PartitionState close_round(PartitionState state,
                           const TripleColoring& coloring) {
  if (state.step != state.round || !state.work_graph) {
    fail(ErrorKind::kPreconditionViolated,
         "close_round needs every part of the round refined");
  }
  const SimpleGraph& g = *state.work_graph;
  const int next = state.round + 1;
  std::size_t t;
  if (is_strict(state)) {
    t = strict_part_size(state.sqrt_log_n, state.n_colors, next);
    if (t == 0) {
      fail_traced(ErrorKind::kStrictSizeUnderflow,
                  "floor(l^-" + std::to_string(next) +
                      " sqrt(log2 N)) is 0",
                  state);
    }
  } else {
    t = static_cast<std::size_t>(adaptive_part_size(state.request));
  }
  if (g.order() < t + static_cast<std::size_t>(state.request.n)) {
    fail_traced(ErrorKind::kReservoirExhausted,
                "reservoir of " + str(g.order()) + " cannot hold a part of " +
                    str(t) + " plus n=" + std::to_string(state.request.n),
                state);
  }
  const SearchMode mode = auto_search_mode(g.order(), static_cast<int>(t),
                                           state.request.dense);
  BicliqueWitness w = with_trace(state, [&] {
    return is_strict(state)
               ? kst_dense(g, static_cast<int>(t), mode, state.request.dense)
               : max_common_neighborhood(g, static_cast<int>(t), mode,
                                         state.request.dense);
  });

  auto& record = state.trace.rounds.back();
  record.new_part_size = static_cast<int>(t);
  record.closing_edges = g.edge_count();
  record.common_neighborhood = w.b_side.size();
  record.exhaustive_close = mode == SearchMode::kExhaustive;
  if (w.b_side.size() < static_cast<std::size_t>(state.request.n)) {
    fail_traced(ErrorKind::kReservoirExhausted,
                "common neighborhood of the new part has " +
                    str(w.b_side.size()) + " vertices, need n=" +
                    std::to_string(state.request.n),
                state);
  }

  std::vector<Vertex> kept;
  const std::size_t keep =
      std::min<std::size_t>(w.b_side.size(), state.request.reservoir_cap);
  kept.reserve(keep);
  for (std::size_t i = 0; i < keep; ++i) {
    kept.push_back(static_cast<Vertex>(w.b_side[i]));
  }
  state.parts.push_back(std::move(w.a_side));
  state.reservoir = VertexSet(std::move(kept));
  state.work_graph.reset();
  state.round = next;
  state.step = 0;

  record.part_sizes = part_sizes(state);
  record.reservoir = state.reservoir.size();
  if (is_strict(state)) check_strict_reservoir(state, coloring.num_vertices());
  check_invariants_or_fail(coloring, state);
  return state;
}

// ---------------------------------------------------------------------------
// Pair-coloring cliques

std::optional<std::vector<std::uint32_t>> find_mono_clique(
    const PairColorMatrix& chi, int size) {
  if (size < 1) fail(ErrorKind::kInvalidArgument, "clique size must be >= 1");
  const int m = chi.order();
  if (size > m) return std::nullopt;
  if (size == 1) return std::vector<std::uint32_t>{0};

  std::optional<std::vector<std::uint32_t>> best;
  std::vector<std::uint32_t> cur;
  for (int c = 0; c < kMaxColors; ++c) {
    const ColorId color(c);
    auto joins = [&](int v) {
      for (auto u : cur) {
        const int a = static_cast<int>(u);
        if (!chi.defined(a, v) || chi.at(a, v) != color) return false;
      }
      return true;
    };
    // Depth-first in lexicographic order: the first clique found is the
    // least one of this color.
    auto search = [&](auto& self, int start) -> bool {
      if (static_cast<int>(cur.size()) == size) return true;
      const int need = size - static_cast<int>(cur.size());
      for (int v = start; v + need <= m; ++v) {
        if (!joins(v)) continue;
        cur.push_back(static_cast<std::uint32_t>(v));
        if (self(self, v + 1)) return true;
        cur.pop_back();
      }
      return false;
    };
    cur.clear();
    if (search(search, 0) && (!best || cur < *best)) best = cur;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Verification

EmbeddingCheck verify_embedding(const TripleColoring& coloring,
                                const MultipartiteEmbedding& embedding) {
  EmbeddingCheck out;
  const auto& parts = embedding.parts;
  if (parts.size() < 3) {
    out.reason = "an embedding needs at least three parts";
    return out;
  }
  const std::size_t n = parts[0].size();
  std::vector<std::pair<Vertex, std::uint32_t>> labeled;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p].size() != n || n == 0) {
      out.reason = "part " + str(p) + " has size " + str(parts[p].size()) +
                   ", expected " + str(n);
      return out;
    }
    if (!parts[p].all_below(coloring.num_vertices())) {
      out.reason = "part " + str(p) + " has a vertex outside [0, N)";
      return out;
    }
    for (Vertex v : parts[p]) {
      labeled.emplace_back(v, static_cast<std::uint32_t>(p));
    }
  }
  std::sort(labeled.begin(), labeled.end());
  for (std::size_t i = 1; i < labeled.size(); ++i) {
    if (labeled[i].first == labeled[i - 1].first) {
      out.reason = "vertex " + str(labeled[i].first) + " lies in two parts";
      return out;
    }
  }
  const int expected = embedding.color.index();
  for (std::size_t k = 2; k < labeled.size(); ++k) {
    for (std::size_t j = 1; j < k; ++j) {
      if (labeled[j].second == labeled[k].second) continue;
      for (std::size_t i = 0; i < j; ++i) {
        if (labeled[i].second == labeled[j].second ||
            labeled[i].second == labeled[k].second) {
          continue;
        }
        ++out.triples_checked;
        const int c = coloring.color_sorted(labeled[i].first,
                                            labeled[j].first,
                                            labeled[k].first);
        if (c != expected) {
          out.violation = {labeled[i].first, labeled[j].first,
                           labeled[k].first};
          out.reason = "crossing triple has color " + std::to_string(c) +
                       ", expected " + std::to_string(expected);
          return out;
        }
      }
    }
  }
  out.ok = true;
  return out;
}

std::optional<InvariantViolation> check_round_invariant(
    const TripleColoring& coloring, const PartitionState& state) {
  const int parts = state.round;
  for (int a = 0; a < parts; ++a) {
    for (int b = a + 1; b < parts; ++b) {
      const ColorId expected = state.chi.at(a, b);
      auto check = [&](Vertex x, Vertex y,
                       Vertex z) -> std::optional<InvariantViolation> {
        const int c = coloring.color_any(x, y, z);
        if (c == expected.index()) return std::nullopt;
        std::array<Vertex, 3> t{x, y, z};
        std::sort(t.begin(), t.end());
        return InvariantViolation{t, a, b, expected, ColorId(c)};
      };
      for (Vertex x : state.parts[static_cast<std::size_t>(a)]) {
        for (Vertex y : state.parts[static_cast<std::size_t>(b)]) {
          for (int c = b + 1; c < parts; ++c) {
            for (Vertex z : state.parts[static_cast<std::size_t>(c)]) {
              if (auto v = check(x, y, z)) return v;
            }
          }
          for (Vertex z : state.reservoir) {
            if (auto v = check(x, y, z)) return v;
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<InvariantViolation> check_step_invariant(
    const TripleColoring& coloring, const PartitionState& state) {
  if (!state.work_graph) return std::nullopt;
  const SimpleGraph& g = *state.work_graph;
  const auto& s = g.universe();
  std::optional<InvariantViolation> found;
  for (int h = 0; h < state.step && !found; ++h) {
    const ColorId expected = state.chi.at(h, state.round);
    for (Vertex x : state.parts[static_cast<std::size_t>(h)]) {
      g.for_each_edge([&](std::size_t u, std::size_t v) {
        if (found) return;
        const int c = coloring.color_any(x, s[u], s[v]);
        if (c == expected.index()) return;
        std::array<Vertex, 3> t{x, s[u], s[v]};
        std::sort(t.begin(), t.end());
        found = InvariantViolation{t, h, state.round, expected, ColorId(c)};
      });
      if (found) break;
    }
  }
  return found;
}

// ---------------------------------------------------------------------------
// Driver

Extraction extract_multipartite(const TripleColoring& coloring,
                                const ExtractionRequest& request,
                                const EngineObserver& observer) {
  request.validate();
  const int l = coloring.num_colors();
  const int clique_size = request.d - 1;
  const bool strict = request.mode == ExtractionMode::kStrict;
  int rounds;
  if (strict) {
    const R2Bound bound = r2_upper_bound(clique_size, l);
    const double sqrt_log_n =
        std::sqrt(std::log2(static_cast<double>(coloring.num_vertices())));
    if (bound.saturated || bound.value > 64 ||
        strict_part_size(sqrt_log_n, l, static_cast<int>(bound.value)) == 0) {
      throw ExtractionFailure(
          ErrorKind::kStrictSizeUnderflow,
          "floor(l^-r sqrt(log2 N)) is 0 for r=" + str(bound.value), {});
    }
    rounds = static_cast<int>(bound.value);
    if (strict_part_size(sqrt_log_n, l, rounds) <
        static_cast<std::size_t>(request.n)) {
      throw ExtractionFailure(ErrorKind::kPreconditionViolated,
                              "log2 N < l^(2r) n^2 for r=" + str(rounds) +
                                  ", n=" + std::to_string(request.n),
                              {});
    }
  } else {
    rounds = request.r_cap > 0 ? request.r_cap : std::max(request.d - 1, 12);
  }

  auto notify = [&](EngineEvent event, const PartitionState& state) {
    if (observer) observer(event, state);
  };
  PartitionState state;
  try {
    state = init_round(coloring, request);
  } catch (const ExtractionFailure&) {
    throw;
  } catch (const Error& e) {
    throw ExtractionFailure(e.kind(), e.what(), {});
  }
  notify(EngineEvent::kInit, state);

  std::optional<std::vector<std::uint32_t>> clique;
  while (true) {
    if (!strict || state.round == rounds) {
      clique = find_mono_clique(state.chi, clique_size);
      if (clique) break;
    }
    if (state.round >= rounds) {
      fail_traced(ErrorKind::kCliqueNotFound,
                  "no monochromatic " + std::to_string(clique_size) +
                      "-clique in chi after " + std::to_string(state.round) +
                      " rounds",
                  state);
    }
    for (int j = 0; j < state.round; ++j) {
      state = refine_step(std::move(state), coloring);
      notify(EngineEvent::kRefine, state);
    }
    state = close_round(std::move(state), coloring);
    notify(EngineEvent::kClose, state);
  }

  const auto n = static_cast<std::size_t>(request.n);
  Extraction out;
  out.embedding.color = state.chi.at(static_cast<int>((*clique)[0]),
                                     static_cast<int>((*clique)[1]));
  for (auto q : *clique) {
    out.embedding.parts.push_back(state.parts[q].prefix(n));
  }
  out.embedding.parts.push_back(state.reservoir.prefix(n));
  state.trace.achieved_n = request.n;
  state.trace.achieved_rounds = state.round;
  state.trace.achieved_c =
      static_cast<double>(request.d) * static_cast<double>(n) /
      state.sqrt_log_n;
  state.trace.clique = *clique;

  const EmbeddingCheck check = verify_embedding(coloring, out.embedding);
  if (!check.ok) {
    fail_traced(ErrorKind::kInternal,
                "assembled embedding failed verification: " + check.reason,
                state);
  }
  out.trace = std::move(state.trace);
  return out;
}

}  // namespace tc3
