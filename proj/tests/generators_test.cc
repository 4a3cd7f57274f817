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

#include "tc3/generators.h"

#include <gtest/gtest.h>

#include <set>

#include "tc3/model.h"

namespace tc3 {
namespace {

// Frozen outputs. A change here breaks every recorded report.
TEST(GoldenTest, UniformColors) {
  EXPECT_EQ(gen_uniform(50, 2, 7).color_sorted(3, 10, 21), 1);
  const auto u16 = gen_uniform(1000, 16, 12345);
  EXPECT_EQ(u16.color_sorted(0, 1, 2), 13);
  EXPECT_EQ(u16.color_sorted(5, 17, 999), 13);
  EXPECT_EQ(u16.color_sorted(100, 200, 300), 10);
  EXPECT_EQ(u16.color_sorted(7, 8, 9), 2);
  EXPECT_EQ(u16.color_sorted(1, 500, 998), 13);

  const auto u3 = gen_uniform(64, 3, 1);
  std::string prefix;
  for (std::uint64_t r = 0; r < 32; ++r) {
    const auto t = colex_unrank(r);
    prefix += static_cast<char>('0' + u3.color_sorted(t[0], t[1], t[2]));
  }
  EXPECT_EQ(prefix, "22000011201211012120210100100202");
}

TEST(GoldenTest, BlockmixBlocksAndPermutation) {
  const auto b = gen_blockmix(30, 2, 3, 3);
  std::string blocks;
  for (Vertex v = 0; v < 30; ++v) {
    blocks += static_cast<char>('0' + b.generator()->block_of(v));
  }
  EXPECT_EQ(blocks, "122221211022020000001121110012");

  const KeyedPermutation p(99, 10, kStreamBlockPermutation);
  std::vector<std::uint64_t> image;
  for (std::uint64_t x = 0; x < 10; ++x) image.push_back(p(x));
  EXPECT_EQ(image, (std::vector<std::uint64_t>{9, 8, 2, 4, 1, 3, 0, 7, 5, 6}));
}

TEST(UniformTest, SingleTriple) {
  const auto c = gen_uniform(3, 5, 0);
  EXPECT_LT(c.color_sorted(0, 1, 2), 5);
}

TEST(UniformTest, BalancedOverAllTriples) {
  const auto c = gen_uniform(50, 2, 0);
  const auto census = color_census(c, VertexSet::range(0, 50));
  EXPECT_EQ(census.total, 19600u);
  EXPECT_NEAR(census.fraction(ColorId(0)), 0.5, 0.05);
}

TEST(UniformTest, EveryColorAppears) {
  const auto c = gen_uniform(30, 16, 4);
  const auto census = color_census(c, VertexSet::range(0, 30));
  for (auto count : census.counts) EXPECT_GT(count, 0u);
}

TEST(UniformTest, DeterministicMaterialization) {
  const auto a = gen_uniform(40, 3, 99).materialize();
  const auto b = gen_uniform(40, 3, 99).materialize();
  EXPECT_EQ(*a.packed(), *b.packed());
  const auto other = gen_uniform(40, 3, 100).materialize();
  EXPECT_FALSE(*a.packed() == *other.packed());
}

TEST(UniformTest, SeedsAreIndependentOfFamily) {
  // Same seed, different families: the crossing colors of blockmix must not
  // simply replay the uniform stream.
  const auto u = gen_uniform(60, 2, 5);
  const auto b = gen_blockmix(60, 2, 5, 60);
  int same = 0;
  for (Vertex k = 2; k < 60; ++k) {
    same += u.color_sorted(0, 1, k) == b.color_sorted(0, 1, k);
  }
  EXPECT_LT(same, 50);
}

TEST(ConstantTest, EveryTripleOneColor) {
  const auto c = gen_constant(5, 2, 0);
  const auto census = color_census(c, VertexSet::range(0, 5));
  EXPECT_EQ(census.counts, (std::vector<std::uint64_t>{10, 0}));
  EXPECT_EQ(gen_constant(9, 4, 3).color_of(8, 0, 4), ColorId(3));
}

TEST(ConstantTest, RejectsColorOutsidePalette) {
  EXPECT_THROW(gen_constant(5, 2, 2), Error);
}

TEST(BlockmixTest, SingleBlockIsConstantZero) {
  const auto c = gen_blockmix(20, 3, 8, 1);
  const auto census = color_census(c, VertexSet::range(0, 20));
  EXPECT_EQ(census.counts[0], census.total);
}

TEST(BlockmixTest, WithinBlockTriplesAreColorZero) {
  const auto c = gen_blockmix(30, 2, 3, 3);
  const auto* g = c.generator();
  std::uint64_t within = 0;
  for (Vertex k = 2; k < 30; ++k) {
    for (Vertex j = 1; j < k; ++j) {
      for (Vertex i = 0; i < j; ++i) {
        if (g->block_of(i) == g->block_of(j) && g->block_of(j) == g->block_of(k)) {
          ++within;
          EXPECT_EQ(c.color_sorted(i, j, k), 0);
        }
      }
    }
  }
  EXPECT_GT(within, 0u);
}

TEST(BlockmixTest, OneBlockPerVertexWhenMEqualsN) {
  const auto c = gen_blockmix(25, 2, 11, 25);
  std::set<std::uint32_t> blocks;
  for (Vertex v = 0; v < 25; ++v) blocks.insert(c.generator()->block_of(v));
  EXPECT_EQ(blocks.size(), 25u);
}

TEST(BlockmixTest, RejectsBadBlockCount) {
  EXPECT_THROW(gen_blockmix(10, 2, 0, 0), Error);
  EXPECT_THROW(gen_blockmix(10, 2, 0, 11), Error);
}

TEST(KeyedPermutationTest, IsABijection) {
  for (std::uint64_t domain : {1u, 2u, 7u, 64u, 1000u, 4097u}) {
    const KeyedPermutation p(123, domain, 1);
    std::vector<char> hit(domain, 0);
    for (std::uint64_t x = 0; x < domain; ++x) {
      const auto y = p(x);
      ASSERT_LT(y, domain);
      ASSERT_FALSE(hit[y]);
      hit[y] = 1;
    }
  }
}

TEST(GeneratorSpecTest, RoundTripsThroughText) {
  GeneratorSpec spec{GeneratorName::kBlockmix, 18446744073709551615ull, {{"m", 4}}};
  EXPECT_EQ(spec.to_string(), "gen=blockmix seed=18446744073709551615 params=m:4");
  EXPECT_EQ(GeneratorSpec::parse(spec.to_string()), spec);
  GeneratorSpec uniform{GeneratorName::kUniform, 3, {}};
  EXPECT_EQ(GeneratorSpec::parse(uniform.to_string()), uniform);
}

TEST(GeneratorSpecTest, ValidationNamesTheProblem) {
  EXPECT_THROW((GeneratorSpec{GeneratorName::kUniform, 0, {{"m", 2}}}.validate(10, 2)),
               Error);
  EXPECT_THROW((GeneratorSpec{GeneratorName::kConstant, 0, {}}.validate(10, 2)),
               Error);
  EXPECT_THROW(GeneratorSpec::parse("gen=nope seed=1 params="), Error);
  EXPECT_THROW(GeneratorSpec::parse("gen=uniform seed=x params="), Error);
  EXPECT_THROW(parse_generator_name("random"), Error);
}

TEST(GeneratorTest, RejectsTinyVertexCounts) {
  EXPECT_THROW(gen_uniform(2, 2, 0), Error);
}

}  // namespace
}  // namespace tc3
