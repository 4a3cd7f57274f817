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

#include "tc3/coloring_io.h"

#include <gtest/gtest.h>

#include <filesystem>

namespace tc3 {
namespace {

FormatError parse_error(std::string_view text) {
  try {
    parse_coloring(text);
  } catch (const FormatError& e) {
    return e;
  }
  ADD_FAILURE() << "no FormatError for: " << text;
  return FormatError(FormatProblem::kIo, 0, "none");
}

TEST(ColoringIoTest, ExplicitHeaderAndLayout) {
  const auto c = gen_constant(5, 2, 1).materialize();
  EXPECT_EQ(serialize_coloring(c), "tc3 1 explicit N=5 l=2\n1111111111\n");
}

TEST(ColoringIoTest, SixtyFourDigitsPerLine) {
  const auto text = serialize_coloring(gen_uniform(10, 16, 2).materialize());
  // C(10,3) = 120 digits: one full line of 64, one of 56.
  const auto first = text.find('\n');
  const auto second = text.find('\n', first + 1);
  const auto third = text.find('\n', second + 1);
  EXPECT_EQ(second - first - 1, 64u);
  EXPECT_EQ(third - second - 1, 56u);
  EXPECT_EQ(third + 1, text.size());
}

TEST(ColoringIoTest, ExplicitRoundTrip) {
  const auto c = gen_uniform(10, 3, 5).materialize();
  const std::string text = serialize_coloring(c);
  const auto back = parse_coloring(text);
  ASSERT_TRUE(back.is_explicit());
  EXPECT_EQ(*back.packed(), *c.packed());
  EXPECT_EQ(serialize_coloring(back), text);
}

TEST(ColoringIoTest, ImplicitRoundTripsAsSpec) {
  const auto c = gen_blockmix(100, 4, 77, 6);
  const std::string text = serialize_coloring(c);
  EXPECT_EQ(text, "tc3 1 implicit N=100 l=4 gen=blockmix seed=77 params=m:6\n");
  const auto back = parse_coloring(text);
  ASSERT_FALSE(back.is_explicit());
  EXPECT_EQ(*back.generator_spec(), *c.generator_spec());
  EXPECT_EQ(back.color_sorted(3, 40, 99), c.color_sorted(3, 40, 99));
}

TEST(ColoringIoTest, FileRoundTripIsByteIdentical) {
  const auto dir = std::filesystem::path(::testing::TempDir());
  const auto a = dir / "tc3_io_a.tc3";
  const auto b = dir / "tc3_io_b.tc3";
  const auto c = gen_uniform(12, 2, 9).materialize();
  write_coloring(c, a);
  write_coloring(read_coloring(a), b);
  EXPECT_EQ(std::filesystem::file_size(a), std::filesystem::file_size(b));
  EXPECT_EQ(serialize_coloring(read_coloring(a)), serialize_coloring(read_coloring(b)));
}

TEST(ColoringIoTest, DistinctProblemsForDistinctDamage) {
  EXPECT_EQ(parse_error("tc3 1 explicit N=5\n").problem(),
            FormatProblem::kMalformedHeader);
  EXPECT_EQ(parse_error("xyz 1 explicit N=5 l=2\n1111111111\n").problem(),
            FormatProblem::kMalformedHeader);
  EXPECT_EQ(parse_error("tc3 2 explicit N=5 l=2\n1111111111\n").problem(),
            FormatProblem::kVersionMismatch);
  EXPECT_EQ(parse_error("tc3 1 explicit N=5 l=2\n11111\n").problem(),
            FormatProblem::kBadPayload);
  EXPECT_EQ(parse_error("tc3 1 explicit N=5 l=2\n11111").problem(),
            FormatProblem::kTruncatedPayload);
  EXPECT_EQ(parse_error("tc3 1 explicit N=5 l=2\n").problem(),
            FormatProblem::kTruncatedPayload);
  EXPECT_EQ(parse_error("tc3 1 explicit N=5 l=2\n1111111111\nextra").problem(),
            FormatProblem::kBadPayload);
  EXPECT_EQ(parse_error("tc3 1 implicit N=5 l=2 gen=bogus seed=1 params=\n")
                .problem(),
            FormatProblem::kMalformedHeader);
}

TEST(ColoringIoTest, CorruptDigitReportsByteOffset) {
  std::string text = serialize_coloring(gen_constant(6, 2, 0).materialize());
  const std::size_t header = text.find('\n') + 1;
  text[header + 7] = '7';
  const auto e = parse_error(text);
  EXPECT_EQ(e.problem(), FormatProblem::kBadPayload);
  EXPECT_EQ(e.offset(), header + 7);
  EXPECT_EQ(e.kind(), ErrorKind::kFormat);
}

TEST(ColoringIoTest, MissingFileIsIoError) {
  try {
    read_coloring("/nonexistent/dir/none.tc3");
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_EQ(e.problem(), FormatProblem::kIo);
  }
}

}  // namespace
}  // namespace tc3
