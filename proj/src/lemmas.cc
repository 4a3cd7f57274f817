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

#include "tc3/lemmas.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <optional>
#include <string>

#include "tc3/philox.h"

namespace tc3 {

namespace {

constexpr std::uint32_t kStreamGreedyStart = 7;

std::optional<std::size_t> position_in(const VertexSet& set, Vertex v) {
  const auto ids = set.ids();
  const auto it = std::lower_bound(ids.begin(), ids.end(), v);
  if (it == ids.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - ids.begin());
}

std::vector<std::uint32_t> mask_positions(Signature mask) {
  std::vector<std::uint32_t> out;
  while (mask != 0) {
    out.push_back(static_cast<std::uint32_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// BipartiteHost

BipartiteHost BipartiteHost::build(VertexSet side_a,
                                   std::vector<Signature> signatures) {
  if (side_a.size() > static_cast<std::size_t>(kMaxSignatureWidth)) {
    fail(ErrorKind::kInvalidArgument,
         "bipartite host side A is capped at 30 vertices");
  }
  const Signature full =
      side_a.size() == 32 ? ~Signature{0}
                          : (Signature{1} << side_a.size()) - 1;
  BipartiteHost host{std::move(side_a), std::move(signatures), 0};
  for (Signature s : host.signatures) {
    if ((s & ~full) != 0) {
      fail(ErrorKind::kInvalidArgument, "signature has bits outside side A");
    }
    host.edge_count += static_cast<std::uint64_t>(std::popcount(s));
  }
  return host;
}

// ---------------------------------------------------------------------------
// SignatureHistogram

SignatureHistogram::SignatureHistogram(int width)
    : width_(width), use_dense_(width <= kDenseHistogramMaxWidth) {
  if (width < 0 || width > kMaxSignatureWidth) {
    fail(ErrorKind::kInvalidArgument, "signature width out of range");
  }
  if (use_dense_) dense_.assign(std::size_t{1} << width, 0);
}

void SignatureHistogram::add(Signature s, std::uint64_t count) {
  if (count == 0) return;
  total_ += count;
  edges_ += count * static_cast<std::uint64_t>(std::popcount(s));
  if (use_dense_) {
    dense_[s] += count;
  } else {
    sparse_.emplace_back(s, count);
  }
}

SignatureHistogram::Choice SignatureHistogram::best_subset(int size) const {
  if (size < 0 || size > width_) {
    fail(ErrorKind::kInvalidArgument, "subset size exceeds the host width");
  }
  if (!use_dense_) return best_subset_search(size);

  // Superset sums: cover[mask] = number of B-elements whose signature
  // contains mask.
  std::vector<std::uint64_t> cover = dense_;
  const std::size_t n_masks = cover.size();
  for (int bit = 0; bit < width_; ++bit) {
    const std::size_t b = std::size_t{1} << bit;
    for (std::size_t mask = 0; mask < n_masks; ++mask) {
      if ((mask & b) == 0) cover[mask] += cover[mask | b];
    }
  }
  Choice best;
  bool have = false;
  for (std::size_t mask = 0; mask < n_masks; ++mask) {
    if (std::popcount(mask) != size) continue;
    const auto m = static_cast<Signature>(mask);
    if (!have || cover[mask] > best.cover ||
        (cover[mask] == best.cover && lex_smaller_mask(m, best.mask))) {
      best = {m, cover[mask]};
      have = true;
    }
  }
  return best;
}

SignatureHistogram::Choice SignatureHistogram::best_subset_search(
    int size) const {
  if (size < 0 || size > width_) {
    fail(ErrorKind::kInvalidArgument, "subset size exceeds the host width");
  }
  std::vector<std::pair<Signature, std::uint64_t>> groups;
  if (use_dense_) {
    for (std::size_t s = 0; s < dense_.size(); ++s) {
      if (dense_[s] != 0) groups.emplace_back(static_cast<Signature>(s), dense_[s]);
    }
  } else {
    groups = sparse_;
    std::sort(groups.begin(), groups.end());
    std::size_t out = 0;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      if (out > 0 && groups[out - 1].first == groups[i].first) {
        groups[out - 1].second += groups[i].second;
      } else {
        groups[out++] = groups[i];
      }
    }
    groups.resize(out);
  }

  auto cover_of = [&](Signature mask) {
    std::uint64_t c = 0;
    for (const auto& [s, w] : groups) {
      if ((s & mask) == mask) c += w;
    }
    return c;
  };

  // The lexicographically first subset seeds the incumbent; the depth-first
  // walk visits subsets in lexicographic order and only replaces it on a
  // strict improvement.
  const Signature first =
      size == 32 ? ~Signature{0} : (Signature{1} << size) - 1;
  Choice best{first, cover_of(first)};

  struct Frame {
    std::vector<std::pair<Signature, std::uint64_t>> live;
  };
  std::vector<Frame> frames(static_cast<std::size_t>(size) + 1);
  frames[0].live = groups;

  auto recurse = [&](auto& self, int depth, int next, Signature mask) -> void {
    if (depth == size) {
      std::uint64_t c = 0;
      for (const auto& g : frames[depth].live) c += g.second;
      if (c > best.cover) best = {mask, c};
      return;
    }
    for (int p = next; p <= width_ - (size - depth); ++p) {
      auto& live = frames[depth + 1].live;
      live.clear();
      std::uint64_t c = 0;
      for (const auto& g : frames[depth].live) {
        if ((g.first >> p) & 1u) {
          live.push_back(g);
          c += g.second;
        }
      }
      if (c <= best.cover) continue;
      self(self, depth + 1, p + 1, mask | (Signature{1} << p));
    }
  };
  if (size == 0) return {0, total_};
  recurse(recurse, 0, 0, 0);
  return best;
}

// ---------------------------------------------------------------------------
// Bipartite lemma

namespace {

BicliqueWitness witness_for_mask(const BipartiteHost& host, Signature mask) {
  BicliqueWitness w;
  w.host_kind = HostKind::kBipartite;
  w.a_mask = mask;
  w.a_side = host.side_a.select(mask_positions(mask));
  for (std::size_t b = 0; b < host.signatures.size(); ++b) {
    if ((host.signatures[b] & mask) == mask) w.b_side.push_back(b);
  }
  return w;
}

}  // namespace

BicliqueWitness best_biclique(const BipartiteHost& host, int a_size) {
  SignatureHistogram hist(host.width());
  for (Signature s : host.signatures) hist.add(s);
  return witness_for_mask(host, hist.best_subset(a_size).mask);
}

std::uint64_t kst_bipartite_guarantee(std::uint64_t b_size, int width) {
  const std::uint64_t cells = std::uint64_t{1} << width;
  return (b_size + cells - 1) / cells;
}

SignatureHistogram::Choice kst_bipartite_choice(const SignatureHistogram& hist,
                                                int n_colors) {
  if (n_colors < 1) fail(ErrorKind::kInvalidArgument, "need at least one color");
  const int width = hist.width();
  const int a = width / n_colors;
  if (a == 0) {
    fail(ErrorKind::kPreconditionViolated,
         "floor(|A|/l) is 0: side A has " + std::to_string(width) +
             " vertices for " + std::to_string(n_colors) + " colors");
  }
  const std::uint64_t b_size = hist.total();
  const auto need = static_cast<unsigned __int128>(width) * b_size;
  if (static_cast<unsigned __int128>(hist.edge_count()) * n_colors < need) {
    fail(ErrorKind::kPreconditionViolated,
         "edge deficit: " + std::to_string(hist.edge_count()) +
             " edges, need |A||B|/l");
  }
  const auto choice = hist.best_subset(a);
  if (choice.cover < kst_bipartite_guarantee(b_size, width)) {
    fail(ErrorKind::kInternal, "bipartite extraction fell short of its bound");
  }
  return choice;
}

BicliqueWitness kst_bipartite(const BipartiteHost& host, int n_colors) {
  SignatureHistogram hist(host.width());
  for (Signature s : host.signatures) hist.add(s);
  const auto choice = kst_bipartite_choice(hist, n_colors);
  BicliqueWitness w = witness_for_mask(host, choice.mask);
  w.guaranteed_b = kst_bipartite_guarantee(host.side_b_size(), host.width());
  return w;
}

// ---------------------------------------------------------------------------
// Dense lemma

std::uint64_t kst_dense_guarantee(std::uint64_t edges, std::uint64_t n,
                                  int t) {
  if (n == 0 || t < 1) return 0;
  // ceil(e^t / n^(2t-1)), exact while both powers fit in 127 bits.
  using u128 = unsigned __int128;
  constexpr u128 kLimit = static_cast<u128>(1) << 126;
  u128 num = 1, den = 1;
  bool exact = true;
  for (int i = 0; i < t && exact; ++i) {
    if (edges != 0 && num > kLimit / edges) exact = false; else num *= edges;
  }
  for (int i = 0; i < 2 * t - 1 && exact; ++i) {
    if (den > kLimit / n) exact = false; else den *= n;
  }
  std::uint64_t bound;
  if (exact) {
    bound = static_cast<std::uint64_t>((num + den - 1) / den);
  } else {
    const long double log_v = t * std::log(static_cast<long double>(edges)) -
                              (2 * t - 1) * std::log(static_cast<long double>(n));
    bound = static_cast<std::uint64_t>(std::ceil(std::exp(log_v) - 1e-12L));
  }
  const auto slack = static_cast<std::uint64_t>(t);
  return bound > slack ? bound - slack : 0;
}

SearchMode auto_search_mode(std::size_t n, int t,
                            const DenseSearchOptions& options) {
  return binomial(n, static_cast<std::uint64_t>(t)) <= options.exhaustive_budget
             ? SearchMode::kExhaustive
             : SearchMode::kGreedyRestarts;
}

namespace {

using Bits = std::vector<std::uint64_t>;

std::size_t popcount_and(std::span<const std::uint64_t> a,
                         std::span<const std::uint64_t> b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  }
  return c;
}

BicliqueWitness make_dense_witness(const SimpleGraph& g,
                                   std::vector<std::size_t> u_local) {
  std::sort(u_local.begin(), u_local.end());
  Bits common(g.row(u_local[0]).begin(), g.row(u_local[0]).end());
  for (std::size_t i = 1; i < u_local.size(); ++i) {
    const auto r = g.row(u_local[i]);
    for (std::size_t w = 0; w < common.size(); ++w) common[w] &= r[w];
  }
  BicliqueWitness w;
  w.host_kind = HostKind::kDenseGraph;
  std::vector<Vertex> u_ids;
  for (auto u : u_local) u_ids.push_back(g.universe()[u]);
  w.a_side = VertexSet(std::move(u_ids));
  for (std::size_t word = 0; word < common.size(); ++word) {
    std::uint64_t bits = common[word];
    while (bits != 0) {
      const std::size_t v = word * 64 + static_cast<std::size_t>(std::countr_zero(bits));
      bits &= bits - 1;
      w.b_side.push_back(g.universe()[v]);
    }
  }
  return w;
}

std::vector<std::size_t> exhaustive_search(const SimpleGraph& g, int t) {
  const std::size_t n = g.order();
  const std::size_t words = g.words_per_row();
  const auto depth_max = static_cast<std::size_t>(t);
  std::vector<Bits> level(depth_max, Bits(words));
  std::vector<std::size_t> chosen(depth_max), best_u;
  long long best = -1;

  auto recurse = [&](auto& self, std::size_t depth, std::size_t start) -> void {
    for (std::size_t u = start; u + (depth_max - depth) <= n; ++u) {
      const auto r = g.row(u);
      std::size_t c = 0;
      if (depth == 0) {
        std::copy(r.begin(), r.end(), level[0].begin());
        for (auto w : r) c += static_cast<std::size_t>(std::popcount(w));
      } else {
        const Bits& prev = level[depth - 1];
        Bits& cur = level[depth];
        for (std::size_t w = 0; w < words; ++w) {
          cur[w] = prev[w] & r[w];
          c += static_cast<std::size_t>(std::popcount(cur[w]));
        }
      }
      if (static_cast<long long>(c) <= best) continue;
      chosen[depth] = u;
      if (depth + 1 == depth_max) {
        best = static_cast<long long>(c);
        best_u = chosen;
      } else {
        self(self, depth + 1, u + 1);
      }
    }
  };
  recurse(recurse, 0, 0);
  if (best_u.empty()) {
    // Every t-set has an empty common neighborhood: the first t-set wins.
    for (std::size_t i = 0; i < depth_max; ++i) best_u.push_back(i);
  }
  return best_u;
}

std::vector<std::size_t> greedy_search(const SimpleGraph& g, int t,
                                       const DenseSearchOptions& options) {
  const std::size_t n = g.order();
  const std::size_t words = g.words_per_row();
  const Philox4x32 rng(options.seed);
  std::vector<std::size_t> best_u;
  long long best = -1;
  const int restarts = std::max(1, options.restarts);
  for (int restart = 0; restart < restarts; ++restart) {
    std::size_t start = 0;
    if (restart == 0) {
      std::size_t best_deg = 0;
      for (std::size_t u = 0; u < n; ++u) {
        const std::size_t d = g.degree(u);
        if (u == 0 || d > best_deg) {
          best_deg = d;
          start = u;
        }
      }
    } else {
      start = keyed_uniform(rng, static_cast<std::uint64_t>(restart),
                            kStreamGreedyStart, n);
    }
    std::vector<std::size_t> u_set{start};
    std::vector<char> in_u(n, 0);
    in_u[start] = 1;
    Bits cur(g.row(start).begin(), g.row(start).end());
    while (u_set.size() < static_cast<std::size_t>(t)) {
      std::size_t pick = n;
      std::size_t pick_c = 0;
      for (std::size_t u = 0; u < n; ++u) {
        if (in_u[u]) continue;
        const std::size_t c = popcount_and(cur, g.row(u));
        if (pick == n || c > pick_c) {
          pick = u;
          pick_c = c;
        }
      }
      u_set.push_back(pick);
      in_u[pick] = 1;
      const auto r = g.row(pick);
      for (std::size_t w = 0; w < words; ++w) cur[w] &= r[w];
    }
    std::size_t c = 0;
    for (auto w : cur) c += static_cast<std::size_t>(std::popcount(w));
    if (static_cast<long long>(c) > best) {
      best = static_cast<long long>(c);
      best_u = u_set;
    }
  }
  return best_u;
}

}  // namespace

BicliqueWitness max_common_neighborhood(const SimpleGraph& g, int t,
                                        SearchMode mode,
                                        const DenseSearchOptions& options) {
  if (t < 1 || static_cast<std::size_t>(t) > g.order()) {
    fail(ErrorKind::kInvalidArgument, "t must lie in [1, |V(G)|]");
  }
  auto u_local = mode == SearchMode::kExhaustive ? exhaustive_search(g, t)
                                                 : greedy_search(g, t, options);
  return make_dense_witness(g, std::move(u_local));
}

BicliqueWitness kst_dense(const SimpleGraph& g, int t, SearchMode mode,
                          const DenseSearchOptions& options) {
  const std::uint64_t n = g.order();
  const std::uint64_t e = g.edge_count();
  // t < eps*n with eps = e/n^2 is t*n < e.
  if (t < 1 || static_cast<unsigned __int128>(t) * n >= e) {
    fail(ErrorKind::kPreconditionViolated,
         "dense extraction needs 1 <= t < e(G)/n (t=" + std::to_string(t) +
             ", n=" + std::to_string(n) + ", e=" + std::to_string(e) + ")");
  }
  BicliqueWitness w = max_common_neighborhood(g, t, mode, options);
  w.guaranteed_b = kst_dense_guarantee(e, n, t);
  if (w.b_side.size() < w.guaranteed_b) {
    if (mode == SearchMode::kExhaustive) {
      fail(ErrorKind::kInternal, "exhaustive dense extraction below its bound");
    }
    const std::string message =
        "greedy search found |W|=" + std::to_string(w.b_side.size()) +
        " below the guaranteed " + std::to_string(w.guaranteed_b);
    throw SearchBudgetExceeded(std::move(w), message);
  }
  return w;
}

// ---------------------------------------------------------------------------
// Verification

bool verify_biclique(const BipartiteHost& host, const BicliqueWitness& w) {
  if (w.host_kind != HostKind::kBipartite) return false;
  for (Vertex a : w.a_side) {
    const auto pos = position_in(host.side_a, a);
    if (!pos) return false;
    for (std::uint64_t b : w.b_side) {
      if (b >= host.signatures.size()) return false;
      if (((host.signatures[b] >> *pos) & 1u) == 0) return false;
    }
  }
  return true;
}

bool verify_biclique(const SimpleGraph& g, const BicliqueWitness& w) {
  if (w.host_kind != HostKind::kDenseGraph) return false;
  for (Vertex u : w.a_side) {
    const auto pu = position_in(g.universe(), u);
    if (!pu) return false;
    for (std::uint64_t v : w.b_side) {
      if (v == u) return false;
      const auto pv = position_in(g.universe(), static_cast<Vertex>(v));
      if (!pv || !g.adjacent(*pu, *pv)) return false;
    }
  }
  return true;
}

}  // namespace tc3
