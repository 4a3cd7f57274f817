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

// Round-based extraction of a monochromatic complete d-partite 3-uniform
// hypergraph K_d(n).
//
// After round i the state holds disjoint parts V_0..V_{i-1} and a reservoir S
// such that for every a < b < i there is a color chi(a,b) shared by all
// triples in V_a x V_b x V_c (b < c < i) and in V_a x V_b x S. Round i+1
// refines each existing part once against a shrinking work graph on S (one
// refine_step per part) and then carves the new part V_i and the next
// reservoir out of S (close_round). A monochromatic (d-1)-clique Q of chi
// then yields the embedding {V_q : q in Q} plus n reservoir vertices.
//
// Indices are 0-based throughout: part a, pair color chi(a, b) for a < b.

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tc3/errors.h"
#include "tc3/lemmas.h"
#include "tc3/model.h"

namespace tc3 {

enum class ExtractionMode { kStrict, kAdaptive };

std::string_view mode_name(ExtractionMode mode);
ExtractionMode parse_mode(std::string_view text);

struct ExtractionRequest {
  int d = 3;  // number of parts
  int n = 1;  // part size
  ExtractionMode mode = ExtractionMode::kAdaptive;
  // Maximum number of rounds. 0 picks the default: the r2 upper bound in
  // strict mode, max(d - 1, 12) in adaptive mode.
  int r_cap = 0;
  std::size_t reservoir_cap = 65536;
  // Adaptive mode: size of the first part (0 means n). Refinement shrinks a
  // part by at most a factor l per round and never below n.
  int initial_part_size = 0;
  DenseSearchOptions dense;
  // Re-check the round invariant by full enumeration after every round.
  bool check_invariants = false;

  // Throws kInvalidArgument unless d >= 3, 1 <= n <= 30 and r_cap is 0 or
  // at least d - 1.
  void validate() const;
};

// chi(a, b) for a < b < order. While a round is being built the order
// already counts its new part.
class PairColorMatrix {
 public:
  int order() const { return order_; }
  void grow() { ++order_; rows_.emplace_back(); }
  void set(int a, int b, ColorId c);
  ColorId at(int a, int b) const;
  bool defined(int a, int b) const;

 private:
  int order_ = 0;
  // rows_[b][a] = chi(a, b), filled as round b is built.
  std::vector<std::vector<std::int16_t>> rows_;
};

struct StepRecord {
  int round = 0;  // the round being built (i + 1)
  int step = 0;   // 1-based: the part refined is step - 1
  ColorId color;
  std::uint64_t color_count = 0;   // triples of `color` over V x E(G)
  std::uint64_t triple_count = 0;  // |V| * e(G) before the step
  std::vector<std::size_t> part_sizes;
  std::uint64_t edges = 0;         // e(G) after the step
  std::size_t reservoir = 0;
  double strict_edge_bound = 0;    // strict mode only
};

struct RoundRecord {
  int round = 0;
  std::vector<std::size_t> part_sizes;
  std::size_t reservoir = 0;
  std::vector<StepRecord> steps;
  // close_round details (absent for round 1)
  int new_part_size = 0;
  std::uint64_t closing_edges = 0;
  std::size_t common_neighborhood = 0;  // |W| before truncation
  bool exhaustive_close = false;
  double strict_reservoir_bound = 0;    // strict mode only
};

struct ExtractionTrace {
  std::vector<RoundRecord> rounds;
  int achieved_n = 0;
  int achieved_rounds = 0;
  double achieved_c = 0;  // final subset size / sqrt(log2 N)
  std::vector<std::uint32_t> clique;
};

struct PartitionState {
  ExtractionRequest request;
  int n_colors = 0;
  double sqrt_log_n = 0;  // sqrt(log2 N)
  int round = 0;          // number of parts
  int step = 0;           // parts already refined in the round being built
  std::vector<VertexSet> parts;
  VertexSet reservoir;
  PairColorMatrix chi;
  // G_{step} over the reservoir; absent at step 0, where it is complete.
  std::optional<SimpleGraph> work_graph;
  ExtractionTrace trace;
};

struct MultipartiteEmbedding {
  std::vector<VertexSet> parts;
  ColorId color;
};

// Failure of an extraction run, carrying the trace up to the failure.
class ExtractionFailure : public Error {
 public:
  ExtractionFailure(ErrorKind kind, const std::string& message,
                    ExtractionTrace trace)
      : Error(kind, message), trace_(std::move(trace)) {}
  const ExtractionTrace& trace() const { return trace_; }

 private:
  ExtractionTrace trace_;
};

// Strict part size after `round` rounds: floor(l^-round sqrt(log2 N)).
std::size_t strict_part_size(double sqrt_log_n, int n_colors, int round);

// Starts round 1: V_0 and the reservoir of the remaining vertices, truncated
// to request.reservoir_cap. Strict mode takes floor(sqrt(log2 N)/l) vertices
// and throws kStrictSizeUnderflow if that is 0.
PartitionState init_round(const TripleColoring& coloring,
                          const ExtractionRequest& request);

// Refines part `step` against the current work graph: picks the majority
// color over all (vertex, edge) triples, then the best subset of the part
// under the bipartite lemma, and keeps only the edges complete to it.
PartitionState refine_step(PartitionState state,
                           const TripleColoring& coloring);

// After every part is refined: extracts the new part U and the next
// reservoir W from the work graph with the dense lemma.
PartitionState close_round(PartitionState state,
                           const TripleColoring& coloring);

// Lexicographically least `size`-set of indices on which chi is constant,
// or nullopt. Exact branch and bound per color class.
std::optional<std::vector<std::uint32_t>> find_mono_clique(
    const PairColorMatrix& chi, int size);

struct EmbeddingCheck {
  bool ok = false;
  std::string reason;
  std::optional<std::array<Vertex, 3>> violation;  // first in colex order
  std::uint64_t triples_checked = 0;
};

// Checks disjointness, equal part sizes and every crossing triple.
EmbeddingCheck verify_embedding(const TripleColoring& coloring,
                                const MultipartiteEmbedding& embedding);

struct InvariantViolation {
  std::array<Vertex, 3> triple;
  int a = 0, b = 0;
  ColorId expected, actual;
};

// Full enumeration of the round invariant on a state between rounds.
std::optional<InvariantViolation> check_round_invariant(
    const TripleColoring& coloring, const PartitionState& state);

// Full enumeration of the step invariant: every refined part h < step is
// monochromatic chi(h, round) against every edge of the current work graph.
std::optional<InvariantViolation> check_step_invariant(
    const TripleColoring& coloring, const PartitionState& state);

enum class EngineEvent { kInit, kRefine, kClose };
using EngineObserver =
    std::function<void(EngineEvent, const PartitionState&)>;

struct Extraction {
  MultipartiteEmbedding embedding;
  ExtractionTrace trace;
};

// Drives init, refine and close until chi holds a monochromatic
// (d-1)-clique (adaptive) or r rounds are done (strict), then assembles and
// verifies the embedding. Throws ExtractionFailure.
Extraction extract_multipartite(const TripleColoring& coloring,
                                const ExtractionRequest& request,
                                const EngineObserver& observer = {});

}  // namespace tc3
