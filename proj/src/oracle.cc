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

#include "tc3/oracle.h"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <sstream>

namespace tc3 {

void OracleBudget::validate() const {
  if (max_subsets == 0 || !(time_limit_seconds > 0)) {
    fail(ErrorKind::kInvalidArgument, "oracle budget must be positive");
  }
}

namespace {

using Clock = std::chrono::steady_clock;

class Deadline {
 public:
  explicit Deadline(double seconds)
      : end_(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                std::chrono::duration<double>(seconds))) {}
  void check(std::uint64_t tick) const {
    if ((tick & 1023) == 0 && Clock::now() > end_) {
      fail(ErrorKind::kBudgetExceeded, "oracle time limit exceeded");
    }
  }

 private:
  Clock::time_point end_;
};

bool lex_smaller(std::uint32_t a, std::uint32_t b) {
  if (a == b) return false;
  const std::uint32_t diff = a ^ b;
  return (a & (diff & (~diff + 1))) != 0;
}

VertexSet mask_to_set(std::uint32_t mask) {
  std::vector<Vertex> ids;
  while (mask != 0) {
    ids.push_back(static_cast<Vertex>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return VertexSet(std::move(ids));
}

void check_subset_budget(const TripleColoring& coloring,
                         const OracleBudget& budget) {
  budget.validate();
  const Vertex n = coloring.num_vertices();
  if (n > 30 || (std::uint64_t{1} << n) > budget.max_subsets) {
    fail(ErrorKind::kBudgetExceeded,
         "exhaustive subset search over N=" + std::to_string(n) +
             " vertices exceeds the subset budget");
  }
}

AlmostMonoWitness small_fallback(const TripleColoring& coloring) {
  const Vertex s = std::min<Vertex>(coloring.num_vertices(), 2);
  AlmostMonoWitness w;
  w.size = s;
  w.subset = VertexSet::range(0, s);
  w.census = color_census(coloring, w.subset);
  return w;
}

AlmostMonoWitness finish(const TripleColoring& coloring, std::uint32_t mask) {
  AlmostMonoWitness w;
  w.subset = mask_to_set(mask);
  w.size = w.subset.size();
  w.census = color_census(coloring, w.subset);
  w.color = w.census.majority();
  return w;
}

// Revolving-door order of the k-subsets of {0..n-1}:
//   R(n,k) = R(n-1,k), then R(n-1,k-1) reversed with n-1 added.
// Neighbors differ by exchanging one element.
void revolving_door(int n, int k, std::vector<std::uint32_t>& out) {
  if (k == 0) {
    out.push_back(0);
    return;
  }
  if (k == n) {
    out.push_back(n == 32 ? ~0u : (1u << n) - 1);
    return;
  }
  revolving_door(n - 1, k, out);
  std::vector<std::uint32_t> tail;
  revolving_door(n - 1, k - 1, tail);
  const std::uint32_t top = 1u << (n - 1);
  for (auto it = tail.rbegin(); it != tail.rend(); ++it) out.push_back(*it | top);
}

template <typename F>
void for_each_pair(std::uint32_t mask, F&& f) {
  for (std::uint32_t a = mask; a != 0; a &= a - 1) {
    const auto p = static_cast<Vertex>(std::countr_zero(a));
    for (std::uint32_t b = a & (a - 1); b != 0; b &= b - 1) {
      f(p, static_cast<Vertex>(std::countr_zero(b)));
    }
  }
}

std::uint64_t max_count(const std::vector<std::uint64_t>& counts) {
  return *std::max_element(counts.begin(), counts.end());
}

}  // namespace

AlmostMonoWitness brute_max_almost_mono(const TripleColoring& coloring,
                                        double epsilon,
                                        const OracleBudget& budget) {
  check_subset_budget(coloring, budget);
  const int n = static_cast<int>(coloring.num_vertices());
  const Deadline deadline(budget.time_limit_seconds);
  const auto n_colors = static_cast<std::size_t>(coloring.num_colors());
  std::uint64_t tick = 0;

  for (int s = n; s >= 3; --s) {
    const std::uint64_t need = min_count_for_density(choose3(static_cast<std::uint64_t>(s)), epsilon);
    std::vector<std::uint32_t> order;
    revolving_door(n, s, order);

    std::vector<std::uint64_t> counts(n_colors, 0);
    for_each_pair(order[0], [&](Vertex p, Vertex q) {
      for (std::uint32_t c = order[0] & ~((2u << q) - 1); c != 0; c &= c - 1) {
        ++counts[static_cast<std::size_t>(coloring.color_sorted(
            p, q, static_cast<Vertex>(std::countr_zero(c))))];
      }
    });

    bool found = false;
    std::uint32_t best = 0;
    for (std::size_t idx = 0; idx < order.size(); ++idx) {
      deadline.check(++tick);
      const std::uint32_t mask = order[idx];
      if (idx > 0) {
        const std::uint32_t prev = order[idx - 1];
        const auto out = static_cast<Vertex>(std::countr_zero(prev & ~mask));
        const auto in = static_cast<Vertex>(std::countr_zero(mask & ~prev));
        for_each_pair(prev & mask, [&](Vertex p, Vertex q) {
          --counts[static_cast<std::size_t>(coloring.color_any(out, p, q))];
          ++counts[static_cast<std::size_t>(coloring.color_any(in, p, q))];
        });
      }
      if (max_count(counts) >= need && (!found || lex_smaller(mask, best))) {
        best = mask;
        found = true;
      }
    }
    if (found) return finish(coloring, best);
  }
  return small_fallback(coloring);
}

AlmostMonoWitness brute_max_almost_mono_gray(const TripleColoring& coloring,
                                             double epsilon,
                                             const OracleBudget& budget) {
  check_subset_budget(coloring, budget);
  const Vertex n = coloring.num_vertices();
  const Deadline deadline(budget.time_limit_seconds);
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(coloring.num_colors()), 0);
  std::vector<std::uint64_t> need(n + 1, 0);
  for (Vertex s = 0; s <= n; ++s) need[s] = min_count_for_density(choose3(s), epsilon);

  std::uint32_t mask = 0;
  std::uint32_t best = 0;
  int best_size = -1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t g = 1; g < limit; ++g) {
    deadline.check(g);
    const auto v = static_cast<Vertex>(std::countr_zero(g));
    const std::uint32_t bit = 1u << v;
    const std::uint32_t rest = mask & ~bit;
    const bool adding = (mask & bit) == 0;
    for (std::uint32_t a = rest; a != 0; a &= a - 1) {
      for (std::uint32_t b = a & (a - 1); b != 0; b &= b - 1) {
        const auto c = static_cast<std::size_t>(coloring.color_any(
            v, static_cast<Vertex>(std::countr_zero(a)),
            static_cast<Vertex>(std::countr_zero(b))));
        if (adding) ++counts[c]; else --counts[c];
      }
    }
    mask ^= bit;
    const int s = std::popcount(mask);
    if (s < 3 || s < best_size) continue;
    if (max_count(counts) < need[static_cast<std::size_t>(s)]) continue;
    if (s > best_size || lex_smaller(mask, best)) {
      best = mask;
      best_size = s;
    }
  }
  if (best_size < 0) return small_fallback(coloring);
  return finish(coloring, best);
}

// ---------------------------------------------------------------------------
// Graph Ramsey numbers

int PairColoring::at(int i, int j) const {
  if (i > j) std::swap(i, j);
  return colors.at(pair_rank(static_cast<Vertex>(i), static_cast<Vertex>(j)));
}

bool has_mono_clique(const PairColoring& coloring, int k) {
  const int m = coloring.order;
  if (k <= 1) return m >= k;
  std::vector<int> chosen;
  auto grow = [&](auto& self, int next, int color) -> bool {
    if (static_cast<int>(chosen.size()) == k) return true;
    for (int v = next; v < m; ++v) {
      bool ok = true;
      for (int u : chosen) ok = ok && coloring.at(u, v) == color;
      if (!ok) continue;
      chosen.push_back(v);
      if (self(self, v + 1, color)) return true;
      chosen.pop_back();
    }
    return false;
  };
  for (int c = 0; c < coloring.n_colors; ++c) {
    if (grow(grow, 0, c)) return true;
  }
  return false;
}

namespace {

class AvoidingSearch {
 public:
  AvoidingSearch(int m, int k, int n_colors, const OracleBudget& budget,
                 const Deadline& deadline, std::uint64_t& nodes)
      : m_(m),
        k_(k),
        n_colors_(n_colors),
        budget_(budget),
        deadline_(deadline),
        nodes_(nodes),
        color_(static_cast<std::size_t>(m) * m, -1) {
    for (int j = 1; j < m; ++j) {
      for (int i = 0; i < j; ++i) edges_.emplace_back(i, j);
    }
  }

  // Fills `out` with an avoiding coloring if one exists.
  bool run(PairColoring& out) {
    if (!extend(0, -1)) return false;
    out.order = m_;
    out.n_colors = n_colors_;
    out.colors.clear();
    for (auto [i, j] : edges_) out.colors.push_back(static_cast<std::uint8_t>(at(i, j)));
    return true;
  }

 private:
  int at(int i, int j) const { return color_[static_cast<std::size_t>(i) * m_ + j]; }
  void set(int i, int j, int c) {
    color_[static_cast<std::size_t>(i) * m_ + j] = c;
    color_[static_cast<std::size_t>(j) * m_ + i] = c;
  }

  // Does coloring edge (i, j) with c complete a monochromatic K_k whose
  // second-largest vertex is i? All its other edges are already colored.
  bool completes_clique(int i, int j, int c) const {
    if (k_ == 2) return true;
    std::vector<int> candidates;
    for (int q = 0; q < i; ++q) {
      if (at(q, i) == c && at(q, j) == c) candidates.push_back(q);
    }
    const int need = k_ - 2;
    std::vector<int> chosen;
    auto grow = [&](auto& self, std::size_t next) -> bool {
      if (static_cast<int>(chosen.size()) == need) return true;
      for (std::size_t x = next; x < candidates.size(); ++x) {
        bool ok = true;
        for (int y : chosen) ok = ok && at(y, candidates[x]) == c;
        if (!ok) continue;
        chosen.push_back(candidates[x]);
        if (self(self, x + 1)) return true;
        chosen.pop_back();
      }
      return false;
    };
    return grow(grow, 0);
  }

  bool extend(std::size_t e, int max_used) {
    if (e == edges_.size()) return true;
    const auto [i, j] = edges_[e];
    const int top = std::min(n_colors_ - 1, max_used + 1);
    for (int c = 0; c <= top; ++c) {
      if (++nodes_ > budget_.max_subsets) {
        fail(ErrorKind::kBudgetExceeded,
             "Ramsey search exceeded " + std::to_string(budget_.max_subsets) +
                 " nodes");
      }
      deadline_.check(nodes_);
      if (completes_clique(i, j, c)) continue;
      set(i, j, c);
      if (extend(e + 1, std::max(max_used, c))) return true;
      set(i, j, -1);
    }
    return false;
  }

  int m_, k_, n_colors_;
  const OracleBudget& budget_;
  const Deadline& deadline_;
  std::uint64_t& nodes_;
  std::vector<int> color_;
  std::vector<std::pair<int, int>> edges_;
};

}  // namespace

R2Exact r2_exact_small(int k, int n_colors, const OracleBudget& budget) {
  if (k < 1 || n_colors < 1 || n_colors > kMaxColors) {
    fail(ErrorKind::kInvalidArgument, "r2 needs k >= 1 and 1 <= l <= 16");
  }
  budget.validate();
  const Deadline deadline(budget.time_limit_seconds);
  R2Exact result;
  result.witness = PairColoring{0, n_colors, {}};
  if (k == 1) {
    // Any single vertex is a monochromatic K_1; K_0 avoids it vacuously.
    result.value = 1;
    return result;
  }
  for (int m = 0;; ++m) {
    PairColoring avoid;
    AvoidingSearch search(m, k, n_colors, budget, deadline, result.nodes);
    if (!search.run(avoid)) {
      result.value = m;
      return result;
    }
    result.witness = std::move(avoid);
  }
}

void R2Table::insert(int k, int n_colors, std::uint64_t value) {
  entries_[{k, n_colors}] = value;
}

const std::uint64_t* R2Table::find(int k, int n_colors) const {
  auto it = entries_.find({k, n_colors});
  return it == entries_.end() ? nullptr : &it->second;
}

std::string R2Table::serialize() const {
  std::string out;
  for (const auto& [key, value] : entries_) {
    out += "r2 k=" + std::to_string(key.first) + " l=" +
           std::to_string(key.second) + " value=" + std::to_string(value) +
           " proof=exhaustive seed-independent\n";
  }
  return out;
}

R2Table R2Table::parse(std::string_view text) {
  R2Table table;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    int k = 0, l = 0;
    unsigned long long value = 0;
    char proof[32] = {0}, tail[32] = {0};
    if (std::sscanf(line.c_str(), "r2 k=%d l=%d value=%llu proof=%31s %31s", &k,
                    &l, &value, proof, tail) != 5 ||
        std::string(proof) != "exhaustive" ||
        std::string(tail) != "seed-independent") {
      fail(ErrorKind::kFormat,
           "bad r2 table line " + std::to_string(line_no) + ": '" + line + "'");
    }
    table.insert(k, l, value);
  }
  return table;
}

const R2Table& R2Table::verified() {
  static const R2Table table = [] {
    R2Table t;
    const OracleBudget budget{std::uint64_t{1} << 24, 60.0};
    auto add = [&](int k, int l) {
      t.insert(k, l, static_cast<std::uint64_t>(r2_exact_small(k, l, budget).value));
    };
    for (int l = 1; l <= kMaxColors; ++l) {
      add(1, l);
      add(2, l);
    }
    for (int k = 3; k <= 6; ++k) add(k, 1);
    add(3, 2);
    return t;
  }();
  return table;
}

R2Bound r2_upper_bound(int k, int n_colors, const R2Table& table) {
  if (k < 1 || n_colors < 1) {
    fail(ErrorKind::kInvalidArgument, "r2 bound needs k >= 1 and l >= 1");
  }
  if (const auto* v = table.find(k, n_colors)) return {*v, true, false};
  if (n_colors == 1) {
    // With one color K_k itself is the forced clique.
    return {static_cast<std::uint64_t>(k), false, false};
  }
  // l^(k l), saturating.
  unsigned __int128 acc = 1;
  const std::uint64_t exponent =
      static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(n_colors);
  for (std::uint64_t i = 0; i < exponent; ++i) {
    acc *= static_cast<unsigned>(n_colors);
    if (acc > kSaturated) return {kSaturated, false, true};
  }
  return {static_cast<std::uint64_t>(acc), false, false};
}

R2Bound r2_upper_bound(int k, int n_colors) {
  return r2_upper_bound(k, n_colors, R2Table::verified());
}

}  // namespace tc3
