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

// JSON views of tc3 results and the witness files that `tc3 verify` reads.
// Field order is fixed, so equal values serialize to equal bytes.

#pragma once

#include <array>
#include <optional>
#include <string>

#include "json.hpp"
#include "tc3/almost_mono.h"
#include "tc3/engine.h"
#include "tc3/model.h"
#include "tc3/oracle.h"

namespace tc3 {

using Json = nlohmann::ordered_json;

Json to_json(const VertexSet& set);
Json to_json(const ColorCensus& census);
Json to_json(const StepRecord& step);
Json to_json(const RoundRecord& round);
Json to_json(const ExtractionTrace& trace);
Json to_json(const MultipartiteEmbedding& embedding);
Json to_json(const AlmostMonoResult& result);
Json to_json(const AlmostMonoWitness& witness);
Json to_json(const PairColoring& coloring);

// Where a coloring came from: a tc3 file, or a generator that rebuilds it.
struct ColoringSource {
  std::optional<std::string> path;
  std::optional<GeneratorSpec> spec;
  Vertex n_vertices = 0;
  int n_colors = 0;
};

Json to_json(const ColoringSource& source);
ColoringSource coloring_source_from_json(const Json& j);

// A claim that can be re-checked against a coloring:
//  * kEmbedding: every crossing triple of `parts` has `color`;
//  * kDenseSubset: `color` covers at least (1 - epsilon) of the triples of
//    `subset`.
struct Witness {
  enum class Kind { kEmbedding, kDenseSubset };

  Kind kind = Kind::kEmbedding;
  MultipartiteEmbedding embedding;
  VertexSet subset;
  ColorId color;
  double epsilon = 0;
  std::optional<ColoringSource> source;
};

Json to_json(const Witness& witness);
// Accepts a witness object, or a report holding one under "witness".
Witness witness_from_json(const Json& j);

struct WitnessCheck {
  bool ok = false;
  std::string reason;
  std::optional<std::array<Vertex, 3>> violation;
  std::uint64_t triples_checked = 0;
};

WitnessCheck check_witness(const TripleColoring& coloring, const Witness& w);

}  // namespace tc3
