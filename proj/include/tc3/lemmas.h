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

// Complete bipartite extraction from dense hosts, by double counting and
// pigeonhole:
//
//  * kst_bipartite: a bipartite host (A, B) with at least |A||B|/l edges
//    contains A' of size floor(|A|/l) whose common neighborhood in B has at
//    least ceil(2^-|A| |B|) elements.
//  * kst_dense: a graph on n vertices with eps*n^2 edges and t < eps*n
//    contains t vertices with at least ceil(eps^t n) - t common neighbors.
//
// Both return the optimum, not merely a witness meeting the bound.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tc3/errors.h"
#include "tc3/model.h"

namespace tc3 {

// Neighborhood of one B-element as a bitmask over positions in side A.
using Signature = std::uint32_t;
inline constexpr int kMaxSignatureWidth = 30;

struct BipartiteHost {
  VertexSet side_a;
  std::vector<Signature> signatures;  // one per B-element
  std::uint64_t edge_count = 0;

  // Validates width and signature bits, caches the edge count.
  static BipartiteHost build(VertexSet side_a,
                             std::vector<Signature> signatures);

  std::size_t side_b_size() const { return signatures.size(); }
  int width() const { return static_cast<int>(side_a.size()); }
};

enum class HostKind { kBipartite, kDenseGraph };

struct BicliqueWitness {
  HostKind host_kind = HostKind::kBipartite;
  // Bipartite: chosen vertices of side A. Dense: the t-set U.
  VertexSet a_side;
  // Bipartite: indices of B-elements. Dense: vertex ids of W.
  std::vector<std::uint64_t> b_side;
  // Positions of a_side inside side A (bipartite only).
  Signature a_mask = 0;
  // The size the lemma promises for b_side.
  std::uint64_t guaranteed_b = 0;
};

// Histogram of B-elements by exact neighborhood signature.
class SignatureHistogram {
 public:
  explicit SignatureHistogram(int width);

  int width() const { return width_; }
  void add(Signature s, std::uint64_t count = 1);
  std::uint64_t total() const { return total_; }
  // Number of edges counted with multiplicity, sum of popcounts.
  std::uint64_t edge_count() const { return edges_; }

  struct Choice {
    Signature mask = 0;
    std::uint64_t cover = 0;  // B-elements whose signature contains mask
  };

  // Among all `size`-subsets of side A, the one contained in the most
  // signatures; ties go to the lexicographically smallest position list.
  // Widths up to 22 use a superset-sum transform over all 2^width masks;
  // wider hosts fall back to a pruned search over the distinct signatures.
  Choice best_subset(int size) const;

  // Reference search used for wide hosts; exposed for cross-checking.
  Choice best_subset_search(int size) const;

 private:
  int width_;
  std::uint64_t total_ = 0;
  std::uint64_t edges_ = 0;
  std::vector<std::uint64_t> dense_;  // 2^width buckets when width <= 22
  std::vector<std::pair<Signature, std::uint64_t>> sparse_;
  bool use_dense_;
};

inline constexpr int kDenseHistogramMaxWidth = 22;

// True iff mask a lists a lexicographically smaller position set than b
// (both of equal popcount).
constexpr bool lex_smaller_mask(Signature a, Signature b) {
  if (a == b) return false;
  const Signature diff = a ^ b;
  return (a & (diff & (~diff + 1))) != 0;
}

// Throws kPreconditionViolated on an edge deficit or floor(|A|/l) == 0.
BicliqueWitness kst_bipartite(const BipartiteHost& host, int n_colors);

// kst_bipartite on a host given only by its signature histogram, for hosts
// too large to list (the engine's B is every edge of a work graph). Returns
// the chosen mask and its cover; same preconditions and guarantee.
SignatureHistogram::Choice kst_bipartite_choice(const SignatureHistogram& hist,
                                                int n_colors);

// ceil(2^-width * b_size).
std::uint64_t kst_bipartite_guarantee(std::uint64_t b_size, int width);

// Same extraction with an explicit |A'|; no density precondition.
BicliqueWitness best_biclique(const BipartiteHost& host, int a_size);

enum class SearchMode { kExhaustive, kGreedyRestarts };

struct DenseSearchOptions {
  int restarts = 32;
  std::uint64_t seed = 0;
  // kst_dense auto-selects exhaustive search when C(n,t) is within this.
  std::uint64_t exhaustive_budget = 1'000'000;
};

// Raised by greedy kst_dense when the best witness found misses the bound.
class SearchBudgetExceeded : public Error {
 public:
  SearchBudgetExceeded(BicliqueWitness best, const std::string& message)
      : Error(ErrorKind::kSearchBudgetExceeded, message),
        best_(std::move(best)) {}
  const BicliqueWitness& best() const { return best_; }

 private:
  BicliqueWitness best_;
};

// ceil(eps^t n) - t (floored at 0) for eps = e / n^2.
std::uint64_t kst_dense_guarantee(std::uint64_t edges, std::uint64_t n, int t);

// Chooses kExhaustive when C(n, t) <= options.exhaustive_budget.
SearchMode auto_search_mode(std::size_t n, int t,
                            const DenseSearchOptions& options = {});

// Throws kPreconditionViolated unless 1 <= t and t < eps*n.
BicliqueWitness kst_dense(const SimpleGraph& g, int t, SearchMode mode,
                          const DenseSearchOptions& options = {});

// The search behind kst_dense without precondition or bound checks: a t-set
// U and its full common neighborhood W. Exhaustive mode maximizes |W| with
// lexicographic tie-break; greedy mode is best-effort.
BicliqueWitness max_common_neighborhood(const SimpleGraph& g, int t,
                                        SearchMode mode,
                                        const DenseSearchOptions& options = {});

// Direct enumeration of all a_side x b_side pairs against the host.
bool verify_biclique(const BipartiteHost& host, const BicliqueWitness& w);
bool verify_biclique(const SimpleGraph& g, const BicliqueWitness& w);

}  // namespace tc3
