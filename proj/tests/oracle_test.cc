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

#include <gtest/gtest.h>

#include <bit>

#include "tc3/generators.h"

namespace tc3 {
namespace {

// Plain reference: every subset, census recomputed from scratch.
std::size_t naive_max_size(const TripleColoring& c, double eps) {
  const Vertex n = c.num_vertices();
  std::size_t best = std::min<std::size_t>(n, 2);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const auto s = static_cast<std::size_t>(std::popcount(mask));
    if (s < 3 || s <= best) continue;
    std::vector<Vertex> ids;
    for (Vertex v = 0; v < n; ++v) {
      if (mask >> v & 1u) ids.push_back(v);
    }
    const auto census = color_census(c, VertexSet(std::move(ids)));
    const auto top = census.counts[static_cast<std::size_t>(census.majority().index())];
    if (top >= min_count_for_density(census.total, eps)) best = s;
  }
  return best;
}

bool triangle_free_in_both(const PairColoring& p) {
  for (int a = 0; a < p.order; ++a) {
    for (int b = a + 1; b < p.order; ++b) {
      for (int c = b + 1; c < p.order; ++c) {
        if (p.at(a, b) == p.at(b, c) && p.at(b, c) == p.at(a, c)) return false;
      }
    }
  }
  return true;
}

TEST(AlmostMonoOracleTest, ConstantColoringIsFullyMonochromatic) {
  const auto c = gen_constant(6, 2, 0);
  const auto w = brute_max_almost_mono(c, 0.0);
  EXPECT_EQ(w.size, 6u);
  EXPECT_EQ(w.subset, VertexSet::range(0, 6));
  EXPECT_EQ(w.color, ColorId(0));
  EXPECT_EQ(brute_max_almost_mono_gray(c, 0.0).subset, w.subset);
}

TEST(AlmostMonoOracleTest, BothPathsMatchNaiveReference) {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const auto c = gen_uniform(9 + static_cast<Vertex>(seed % 4),
                               2 + static_cast<int>(seed % 3), seed);
    for (double eps : {0.0, 0.1, 0.25, 0.4}) {
      const auto rev = brute_max_almost_mono(c, eps);
      const auto gray = brute_max_almost_mono_gray(c, eps);
      EXPECT_EQ(rev.size, naive_max_size(c, eps)) << seed << " eps=" << eps;
      EXPECT_EQ(rev.subset, gray.subset) << seed << " eps=" << eps;
      EXPECT_EQ(rev.census.counts, gray.census.counts);
      EXPECT_EQ(rev.census.counts, color_census(c, rev.subset).counts);
    }
  }
}

TEST(AlmostMonoOracleTest, WitnessMeetsThreshold) {
  const auto c = gen_uniform(14, 2, 21);
  const double eps = 0.2;
  const auto w = brute_max_almost_mono(c, eps);
  ASSERT_GE(w.size, 3u);
  EXPECT_GE(w.census.counts[static_cast<std::size_t>(w.color.index())],
            min_count_for_density(w.census.total, eps));
}

TEST(AlmostMonoOracleTest, MonotoneInEpsilon) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const auto c = gen_uniform(12, 3, seed + 40);
    std::size_t prev = 0;
    for (double eps : {0.0, 0.05, 0.1, 0.2, 0.3, 0.5, 0.7, 1.0}) {
      const auto size = brute_max_almost_mono(c, eps).size;
      EXPECT_GE(size, prev) << "seed " << seed << " eps " << eps;
      prev = size;
    }
    EXPECT_EQ(prev, 12u);
  }
}

TEST(AlmostMonoOracleTest, TinyInputsFallBackToTrivialSubsets) {
  const auto c = gen_uniform(3, 2, 1);
  EXPECT_EQ(brute_max_almost_mono(c, 0.0).size, 3u);
}

TEST(AlmostMonoOracleTest, BudgetIsEnforced) {
  const auto c = gen_uniform(22, 2, 1);
  OracleBudget small;
  small.max_subsets = 1u << 20;
  try {
    brute_max_almost_mono(c, 0.1, small);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kBudgetExceeded);
  }
  OracleBudget bad;
  bad.time_limit_seconds = 0;
  EXPECT_THROW(brute_max_almost_mono(gen_uniform(5, 2, 1), 0.1, bad), Error);
}

TEST(RamseyOracleTest, TriangleTwoColors) {
  const auto r = r2_exact_small(3, 2);
  EXPECT_EQ(r.value, 6);
  ASSERT_EQ(r.witness.order, 5);
  EXPECT_FALSE(has_mono_clique(r.witness, 3));
  EXPECT_TRUE(triangle_free_in_both(r.witness));
}

TEST(RamseyOracleTest, EveryTwoColoringOfK6HasATriangle) {
  PairColoring p{6, 2, std::vector<std::uint8_t>(15, 0)};
  for (std::uint32_t bits = 0; bits < (1u << 15); ++bits) {
    for (int e = 0; e < 15; ++e) p.colors[static_cast<std::size_t>(e)] = bits >> e & 1u;
    ASSERT_TRUE(has_mono_clique(p, 3));
    ASSERT_FALSE(triangle_free_in_both(p));
  }
}

TEST(RamseyOracleTest, DegenerateCases) {
  EXPECT_EQ(r2_exact_small(1, 4).value, 1);
  EXPECT_EQ(r2_exact_small(2, 3).value, 2);
  EXPECT_EQ(r2_exact_small(4, 1).value, 4);
}

TEST(RamseyOracleTest, LargeCaseExhaustsBudget) {
  OracleBudget budget;
  budget.max_subsets = 100000;
  try {
    r2_exact_small(3, 3, budget);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kBudgetExceeded);
  }
}

TEST(RamseyOracleTest, PentagonHasNoMonoTriangle) {
  // Cycle edges color 0, chords color 1.
  PairColoring p{5, 2, std::vector<std::uint8_t>(10, 1)};
  for (int i = 0; i < 5; ++i) {
    const int a = std::min(i, (i + 1) % 5), b = std::max(i, (i + 1) % 5);
    p.colors[pair_rank(static_cast<Vertex>(a), static_cast<Vertex>(b))] = 0;
  }
  EXPECT_FALSE(has_mono_clique(p, 3));
  EXPECT_TRUE(has_mono_clique(p, 2));
}

TEST(R2TableTest, VerifiedEntries) {
  const auto& t = R2Table::verified();
  ASSERT_NE(t.find(3, 2), nullptr);
  EXPECT_EQ(*t.find(3, 2), 6u);
  EXPECT_EQ(*t.find(2, 7), 2u);
  EXPECT_EQ(*t.find(5, 1), 5u);
  EXPECT_EQ(t.find(4, 2), nullptr);
}

TEST(R2TableTest, SerializeRoundTrip) {
  const auto& t = R2Table::verified();
  const auto text = t.serialize();
  EXPECT_NE(text.find("r2 k=3 l=2 value=6 proof=exhaustive seed-independent\n"),
            std::string::npos);
  const auto back = R2Table::parse(text);
  EXPECT_EQ(back.serialize(), text);
  EXPECT_EQ(back.size(), t.size());
  EXPECT_THROW(R2Table::parse("r2 k=3 l=2 value=6 proof=guess x\n"), Error);
}

TEST(R2BoundTest, Values) {
  const auto exact = r2_upper_bound(3, 2);
  EXPECT_EQ(exact.value, 6u);
  EXPECT_TRUE(exact.exact);
  const auto b = r2_upper_bound(5, 2);
  EXPECT_EQ(b.value, 1024u);
  EXPECT_FALSE(b.exact);
  EXPECT_EQ(r2_upper_bound(4, 2).value, 256u);
  EXPECT_EQ(r2_upper_bound(2, 16).value, 2u);
  EXPECT_TRUE(r2_upper_bound(12, 16).saturated);
  EXPECT_EQ(r2_upper_bound(9, 1).value, 9u);
}

TEST(R2BoundTest, BoundDominatesExactValues) {
  const R2Table empty;
  for (int k = 1; k <= 3; ++k) {
    for (int l = 1; l <= 2; ++l) {
      EXPECT_GE(r2_upper_bound(k, l, empty).value,
                static_cast<std::uint64_t>(r2_exact_small(k, l).value));
    }
  }
}

}  // namespace
}  // namespace tc3
