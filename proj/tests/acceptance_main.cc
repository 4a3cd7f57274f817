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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <sys/resource.h>

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cli.h"
#include "tc3/almost_mono.h"
#include "tc3/engine.h"
#include "tc3/generators.h"
#include "tc3/lemmas.h"
#include "tc3/oracle.h"
#include "tc3/philox.h"

namespace tc3 {
namespace {

using Clock = std::chrono::steady_clock;
using u128 = unsigned __int128;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint64_t peak_rss_bytes() {
  rusage usage{};
  getrusage(RUSAGE_SELF, &usage);
  return static_cast<std::uint64_t>(usage.ru_maxrss) * 1024;
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::uint32_t draw(const Philox4x32& rng, std::uint64_t index, std::uint32_t stream,
                   std::uint64_t bound) {
  return keyed_uniform(rng, index, stream, bound);
}

// ---------------------------------------------------------------------------

Outcome criterion1() {
  const auto start = Clock::now();
  const Philox4x32 rng(0xC1);
  std::uint64_t failures = 0, checked_pairs = 0;
  std::string first_failure;
  for (std::uint64_t h = 0; h < 1000; ++h) {
    const int width = 4 + static_cast<int>(draw(rng, h, 0, 13));
    const std::size_t b_size = 64 + draw(rng, h, 1, 4096 - 64 + 1);
    const int l = 2 + static_cast<int>(draw(rng, h, 2, 3));
    // Edge probability in [1/l, 1/l + 0.6(1 - 1/l)].
    const std::uint32_t scale = 1u << 20;
    const double p = 1.0 / l + 0.6 * (1.0 - 1.0 / l) * draw(rng, h, 3, scale) / scale;
    std::vector<Signature> sigs(b_size, 0);
    std::uint64_t edges = 0;
    for (std::size_t b = 0; b < b_size; ++b) {
      for (int a = 0; a < width; ++a) {
        if (draw(rng, (h << 32) | (b << 5) | static_cast<std::uint64_t>(a), 4, scale) <
            p * scale) {
          sigs[b] |= Signature{1} << a;
          ++edges;
        }
      }
    }
    // Top up to the density floor |A||B|/l.
    const std::uint64_t need = (static_cast<std::uint64_t>(width) * b_size + l - 1) / l;
    for (std::size_t b = 0; b < b_size && edges < need; ++b) {
      for (int a = 0; a < width && edges < need; ++a) {
        if ((sigs[b] >> a & 1u) == 0) {
          sigs[b] |= Signature{1} << a;
          ++edges;
        }
      }
    }
    const auto host = BipartiteHost::build(VertexSet::range(0, static_cast<Vertex>(width)),
                                           std::move(sigs));
    bool ok = true;
    try {
      const auto w = kst_bipartite(host, l);
      for (Vertex a : w.a_side) {
        for (auto b : w.b_side) {
          ++checked_pairs;
          ok = ok && (host.signatures[b] >> a & 1u);
        }
      }
      ok = ok && w.a_side.size() == static_cast<std::size_t>(width / l);
      const std::uint64_t floor_b =
          (b_size + (std::uint64_t{1} << width) - 1) >> width;
      ok = ok && w.b_side.size() >= floor_b;
    } catch (const Error& e) {
      ok = false;
      if (first_failure.empty()) first_failure = e.what();
    }
    if (!ok) {
      ++failures;
      if (first_failure.empty()) first_failure = "host " + std::to_string(h);
    }
  }
  const double elapsed = seconds_since(start);
  Outcome o;
  o.pass = failures == 0 && elapsed < 60.0;
  o.detail = "1000 hosts, " + std::to_string(failures) + " failures, " +
             std::to_string(checked_pairs) + " witness pairs enumerated, " +
             std::to_string(elapsed) + " s (limit 60 s)";
  if (!first_failure.empty()) o.detail += "; first: " + first_failure;
  return o;
}

// ---------------------------------------------------------------------------

// Largest common neighborhood of any t-set, by direct pair/triple loops over
// adjacency bitmasks.
std::size_t enumeration_optimum(const std::vector<std::uint64_t>& adj, int t) {
  const std::size_t n = adj.size();
  std::size_t best = 0;
  for (std::size_t a = 0; a < n; ++a) {
    if (t == 1) {
      best = std::max<std::size_t>(best, std::popcount(adj[a]));
      continue;
    }
    for (std::size_t b = a + 1; b < n; ++b) {
      const std::uint64_t ab = adj[a] & adj[b];
      if (t == 2) {
        best = std::max<std::size_t>(best, std::popcount(ab));
        continue;
      }
      for (std::size_t c = b + 1; c < n; ++c) {
        best = std::max<std::size_t>(best, std::popcount(ab & adj[c]));
      }
    }
  }
  return best;
}

Outcome criterion2() {
  const auto start = Clock::now();
  const Philox4x32 rng(0xC2);
  std::uint64_t failures = 0, graphs = 0;
  std::string first_failure;
  for (std::uint64_t attempt = 0; graphs < 500; ++attempt) {
    const std::size_t n = 8 + draw(rng, attempt, 0, 33);
    const std::uint32_t scale = 1u << 20;
    const double p = 0.25 + 0.7 * draw(rng, attempt, 1, scale) / scale;
    SimpleGraph g(VertexSet::range(0, static_cast<Vertex>(n)));
    std::vector<std::uint64_t> adj(n, 0);
    for (std::size_t v = 1; v < n; ++v) {
      for (std::size_t u = 0; u < v; ++u) {
        if (draw(rng, (attempt << 16) | (v << 6) | u, 2, scale) < p * scale) {
          g.add_edge(u, v);
          adj[u] |= std::uint64_t{1} << v;
          adj[v] |= std::uint64_t{1} << u;
        }
      }
    }
    const int t = 1 + static_cast<int>(draw(rng, attempt, 3, 3));
    // Admissible iff t < eps n, i.e. t n < e(G).
    if (static_cast<std::uint64_t>(t) * n >= g.edge_count()) continue;
    ++graphs;
    bool ok = true;
    try {
      const auto w = kst_dense(g, t, SearchMode::kExhaustive);
      const std::uint64_t guarantee = kst_dense_guarantee(g.edge_count(), n, t);
      // Independent check of the bound: ceil(e^t / n^(2t-1)) - t.
      u128 num = 1, den = 1;
      for (int i = 0; i < t; ++i) num *= g.edge_count();
      for (int i = 0; i < 2 * t - 1; ++i) den *= n;
      const u128 ceil_bound = (num + den - 1) / den;
      const std::uint64_t bound =
          ceil_bound > static_cast<u128>(t) ? static_cast<std::uint64_t>(ceil_bound) - t : 0;
      ok = guarantee == bound && w.b_side.size() >= bound &&
           w.b_side.size() == enumeration_optimum(adj, t) &&
           w.a_side.size() == static_cast<std::size_t>(t);
      std::uint64_t common = ~std::uint64_t{0};
      for (Vertex u : w.a_side) common &= adj[u];
      for (auto v : w.b_side) ok = ok && (common >> v & 1u);
    } catch (const Error& e) {
      ok = false;
      if (first_failure.empty()) first_failure = e.what();
    }
    if (!ok) {
      ++failures;
      if (first_failure.empty()) first_failure = "graph " + std::to_string(attempt);
    }
  }
  const double elapsed = seconds_since(start);
  Outcome o;
  o.pass = failures == 0 && elapsed < 120.0;
  o.detail = std::to_string(graphs) + " graphs, " + std::to_string(failures) +
             " failures, " + std::to_string(elapsed) + " s (limit 120 s)";
  if (!first_failure.empty()) o.detail += "; first: " + first_failure;
  return o;
}

// ---------------------------------------------------------------------------

struct InvariantTally {
  std::uint64_t closes = 0;
  std::uint64_t triples = 0;
  std::uint64_t violations = 0;
};

void enumerate_round_invariant(const TripleColoring& c, const PartitionState& st,
                               InvariantTally& tally) {
  ++tally.closes;
  for (int a = 0; a < st.round; ++a) {
    for (int b = a + 1; b < st.round; ++b) {
      const ColorId want = st.chi.at(a, b);
      for (Vertex x : st.parts[static_cast<std::size_t>(a)]) {
        for (Vertex y : st.parts[static_cast<std::size_t>(b)]) {
          for (Vertex z : st.reservoir) {
            ++tally.triples;
            tally.violations += c.color_of(x, y, z) != want;
          }
          for (int k = b + 1; k < st.round; ++k) {
            for (Vertex z : st.parts[static_cast<std::size_t>(k)]) {
              ++tally.triples;
              tally.violations += c.color_of(x, y, z) != want;
            }
          }
        }
      }
    }
  }
}

Outcome criterion3() {
  InvariantTally tally;
  int runs = 0, runs_without_close = 0, completed = 0;
  ExtractionRequest request;
  request.d = 5;
  request.n = 1;
  request.initial_part_size = 3;
  auto one = [&](const TripleColoring& c) {
    ++runs;
    const std::uint64_t before = tally.closes;
    try {
      extract_multipartite(c, request, [&](EngineEvent e, const PartitionState& st) {
        if (e == EngineEvent::kClose) enumerate_round_invariant(c, st, tally);
      });
      ++completed;
    } catch (const ExtractionFailure&) {
    }
    if (tally.closes == before) ++runs_without_close;
  };
  for (std::uint64_t seed = 0; seed < 25; ++seed) one(gen_uniform(512, 2, seed));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    one(gen_blockmix(512, 2, seed, 2 + static_cast<std::uint32_t>(seed % 6)));
  }
  Outcome o;
  o.pass = tally.violations == 0 && runs_without_close == 0;
  o.detail = std::to_string(runs) + " runs (" + std::to_string(completed) +
             " completed), " + std::to_string(tally.closes) + " closed rounds, " +
             std::to_string(tally.triples) + " triples enumerated, " +
             std::to_string(tally.violations) + " violations";
  return o;
}

// ---------------------------------------------------------------------------

Outcome criterion4() {
  const auto start = Clock::now();
  const Vertex n_vertices = 1u << 16;
  const auto c = gen_constant(n_vertices, 2, 0);
  ExtractionRequest request;
  request.d = 3;
  request.n = 1;
  request.mode = ExtractionMode::kStrict;
  Outcome o;
  try {
    const auto out = extract_multipartite(c, request);
    const double sqrt_log_n = std::sqrt(std::log2(static_cast<double>(n_vertices)));
    bool sizes_ok = true, reservoir_ok = true;
    std::string rounds_text;
    for (const auto& round : out.trace.rounds) {
      const int i = round.round;
      const auto expected = static_cast<std::size_t>(
          std::floor(sqrt_log_n / std::pow(2.0, i) + 1e-9));
      for (auto s : round.part_sizes) sizes_ok = sizes_ok && s == expected;
      const double floor_s = std::pow(static_cast<double>(n_vertices),
                                      0.25 + std::pow(2.0, -i));
      reservoir_ok = reservoir_ok && static_cast<double>(round.reservoir) >= floor_s;
      rounds_text += " round " + std::to_string(i) + ": parts of " +
                     std::to_string(expected) + ", |S|=" +
                     std::to_string(round.reservoir) + " >= " +
                     std::to_string(static_cast<std::uint64_t>(std::ceil(floor_s))) + ";";
    }
    const bool n_ok = out.trace.achieved_n == 1 &&
                      verify_embedding(c, out.embedding).ok;
    const double elapsed = seconds_since(start);
    const std::uint64_t rss = peak_rss_bytes();
    o.pass = n_ok && sizes_ok && reservoir_ok && out.trace.rounds.size() == 2 &&
             elapsed < 600.0 && rss < (std::uint64_t{4} << 30);
    o.detail = "n=" + std::to_string(out.trace.achieved_n) + ";" + rounds_text + " " +
               std::to_string(elapsed) + " s (limit 600 s), peak RSS " +
               std::to_string(rss >> 20) + " MiB (limit 4096 MiB)";
  } catch (const Error& e) {
    o.pass = false;
    o.detail = "strict run failed: " + std::string(error_kind_name(e.kind())) + ": " +
               e.what();
  }
  return o;
}

// ---------------------------------------------------------------------------

Outcome criterion5() {
  int runs = 0, successes = 0, verified = 0, failures = 0, unstructured = 0;
  int constant_runs = 0, constant_ok = 0;
  ExtractionRequest request;
  request.d = 3;
  request.n = 2;
  auto one = [&](const TripleColoring& c, bool constant) {
    ++runs;
    try {
      const auto out = extract_multipartite(c, request);
      ++successes;
      const bool ok = verify_embedding(c, out.embedding).ok;
      verified += ok;
      if (constant) {
        std::vector<Vertex> ids;
        for (const auto& p : out.embedding.parts) ids.insert(ids.end(), p.begin(), p.end());
        const auto census = color_census(c, VertexSet::from_unsorted(ids));
        constant_ok += ok && census.counts[static_cast<std::size_t>(
                                 census.majority().index())] == census.total;
      }
    } catch (const ExtractionFailure& e) {
      ++failures;
      unstructured += e.trace().rounds.empty();
    }
  };
  for (int l : {2, 3}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) one(gen_uniform(4096, l, seed), false);
    for (int color = 0; color < l; ++color) {
      ++constant_runs;
      one(gen_constant(4096, l, color), true);
    }
  }
  Outcome o;
  o.pass = verified == successes && unstructured == 0 && constant_ok == constant_runs;
  o.detail = std::to_string(runs) + " runs, " + std::to_string(successes) +
             " successes, " + std::to_string(verified) + " verified, " +
             std::to_string(failures) + " failures (" + std::to_string(unstructured) +
             " without trace), constant inputs " + std::to_string(constant_ok) + "/" +
             std::to_string(constant_runs) + " at density 1";
  return o;
}

// ---------------------------------------------------------------------------

Outcome criterion6() {
  int successes[2] = {0, 0};
  int link_failures[3] = {0, 0, 0};
  const double epsilons[2] = {1.0, 0.5};
  std::vector<TripleColoring> corpus;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    corpus.push_back(gen_uniform(1024, 2, seed));
    corpus.push_back(gen_uniform(512, 3, seed));
    corpus.push_back(gen_blockmix(1024, 2, seed, 2 + static_cast<std::uint32_t>(seed)));
  }
  corpus.push_back(gen_constant(512, 2, 1));
  corpus.push_back(gen_constant(512, 3, 2));
  for (int e = 0; e < 2; ++e) {
    for (const auto& c : corpus) {
      AlmostMonoRun run;
      try {
        run = almost_mono_subset(c, epsilons[e]);
      } catch (const ExtractionFailure&) {
        continue;
      }
      ++successes[e];
      // Recount the census, then check the chain with exact integers:
      //   count/total >= C(d,3) n^3 / C(dn,3) > 1 - 3/d >= 1 - eps.
      const auto census = color_census(c, run.result.subset);
      const u128 count = census.counts[static_cast<std::size_t>(census.majority().index())];
      const u128 total = census.total;
      const auto d = static_cast<std::uint64_t>(run.d);
      const auto n = static_cast<std::uint64_t>(run.n);
      const u128 crossing = static_cast<u128>(choose3(d)) * n * n * n;
      const u128 all = choose3(d * n);
      link_failures[0] += !(count * all >= crossing * total);
      link_failures[1] += !(crossing * d > all * (d - 3));
      link_failures[2] += !(3.0 / static_cast<double>(d) <= epsilons[e] + 1e-12);
    }
  }
  Outcome o;
  o.pass = successes[0] > 0 && successes[1] > 0 && link_failures[0] == 0 &&
           link_failures[1] == 0 && link_failures[2] == 0;
  o.detail = "successes: eps=1 " + std::to_string(successes[0]) + ", eps=0.5 " +
             std::to_string(successes[1]) + " of " + std::to_string(corpus.size()) +
             " each; failed links: census>=crossing " + std::to_string(link_failures[0]) +
             ", crossing>1-3/d " + std::to_string(link_failures[1]) +
             ", 1-3/d>=1-eps " + std::to_string(link_failures[2]);
  return o;
}

// ---------------------------------------------------------------------------

Outcome criterion7() {
  int disagreements = 0, dominance_failures = 0, compared = 0, mono_compared = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto c = gen_uniform(9, 2, 1000 + seed);
    const auto rev = brute_max_almost_mono(c, 0.0);
    const auto gray = brute_max_almost_mono_gray(c, 0.0);
    disagreements += rev.subset != gray.subset || rev.census.counts != gray.census.counts;
    AlmostMonoRun run;
    try {
      run = almost_mono_subset(c, 1.0);
    } catch (const ExtractionFailure&) {
      continue;
    }
    ++compared;
    const std::size_t s = run.result.subset.size();
    // The pipeline's own threshold: the fraction of non-majority triples.
    const double eps_run =
        1.0 - static_cast<double>(run.result.census.counts[static_cast<std::size_t>(
                  run.result.majority_color.index())]) /
                  static_cast<double>(run.result.census.total);
    const auto at_run = brute_max_almost_mono(c, eps_run);
    dominance_failures += at_run.size < s;
    dominance_failures += at_run.subset != brute_max_almost_mono_gray(c, eps_run).subset;
    if (run.result.census.counts[static_cast<std::size_t>(
            run.result.majority_color.index())] == run.result.census.total) {
      ++mono_compared;
      dominance_failures += rev.size < s;
    }
  }
  Outcome o;
  o.pass = disagreements == 0 && dominance_failures == 0 && compared > 0;
  o.detail = "100 colorings, " + std::to_string(disagreements) +
             " path disagreements at eps=0; " + std::to_string(compared) +
             " pipeline results compared (" + std::to_string(mono_compared) +
             " monochromatic vs the eps=0 optimum), " +
             std::to_string(dominance_failures) + " dominance failures";
  return o;
}

// ---------------------------------------------------------------------------

bool has_triangle(const std::vector<int>& color, int order) {
  auto at = [&](int a, int b) { return color[static_cast<std::size_t>(pair_rank(a, b))]; };
  for (int a = 0; a < order; ++a) {
    for (int b = a + 1; b < order; ++b) {
      for (int c = b + 1; c < order; ++c) {
        if (at(a, b) == at(a, c) && at(a, c) == at(b, c)) return true;
      }
    }
  }
  return false;
}

Outcome criterion8() {
  const auto start = Clock::now();
  Outcome o;
  const auto r = r2_exact_small(3, 2);
  // Independent exhaustive check over all pair colorings of K5 and K6.
  int k6_free = 0, k5_free = 0;
  std::vector<int> color(15, 0);
  for (std::uint32_t bits = 0; bits < (1u << 15); ++bits) {
    for (int e = 0; e < 15; ++e) color[static_cast<std::size_t>(e)] = bits >> e & 1u;
    k6_free += !has_triangle(color, 6);
  }
  for (std::uint32_t bits = 0; bits < (1u << 10); ++bits) {
    for (int e = 0; e < 10; ++e) color[static_cast<std::size_t>(e)] = bits >> e & 1u;
    k5_free += !has_triangle(color, 5);
  }
  std::vector<int> witness;
  for (auto c : r.witness.colors) witness.push_back(c);
  const bool witness_ok = r.witness.order == 5 && !has_triangle(witness, 5);
  const auto bound = r2_upper_bound(3, 2);
  const double elapsed = seconds_since(start);
  o.pass = r.value == 6 && k6_free == 0 && k5_free > 0 && witness_ok &&
           bound.value == 6 && bound.exact && elapsed < 10.0;
  o.detail = "r2(3,2)=" + std::to_string(r.value) + ", triangle-free colorings: K6 " +
             std::to_string(k6_free) + " of 32768, K5 " + std::to_string(k5_free) +
             " of 1024, witness " + (witness_ok ? "valid" : "invalid") +
             ", upper bound " + std::to_string(bound.value) +
             (bound.exact ? " (table)" : " (formula)") + ", " +
             std::to_string(elapsed) + " s (limit 10 s)";
  return o;
}

// ---------------------------------------------------------------------------

Outcome criterion9() {
  const auto start = Clock::now();
  const auto r = cli::discrepancy_experiment(2048, 2, 32, 10000, 9);
  const double elapsed = seconds_since(start);
  Outcome o;
  o.pass = r.samples == 10000 && r.max_deviation <= 0.1 && elapsed < 120.0;
  o.detail = "10000 subsets of 32, max deviation " + std::to_string(r.max_deviation) +
             " (limit 0.1), mean " + std::to_string(r.mean_deviation) + ", " +
             std::to_string(elapsed) + " s (limit 120 s)";
  return o;
}

}  // namespace
}  // namespace tc3

int main() {
  using tc3::Outcome;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"kst_bipartite contract", tc3::criterion1},
      {"kst_dense exhaustive contract", tc3::criterion2},
      {"round invariant", tc3::criterion3},
      {"strict bookkeeping", tc3::criterion4},
      {"end-to-end adaptive", tc3::criterion5},
      {"density chain", tc3::criterion6},
      {"oracle dominance", tc3::criterion7},
      {"r2 table", tc3::criterion8},
      {"tightness experiment", tc3::criterion9},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("unexpected exception: ") + e.what();
    }
    failed += !o.pass;
    std::printf("%s criterion %zu (%s): %s\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
