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

#include "tc3/report.h"

#include <string>
#include <vector>

namespace tc3 {

namespace {

VertexSet vertex_set_from_json(const Json& j) {
  if (!j.is_array()) fail(ErrorKind::kFormat, "vertex set must be an array");
  std::vector<Vertex> ids;
  for (const auto& v : j) ids.push_back(v.get<Vertex>());
  return VertexSet(std::move(ids));
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    fail(ErrorKind::kFormat, std::string("witness is missing '") + key + "'");
  }
  return j.at(key);
}

}  // namespace

Json to_json(const VertexSet& set) {
  Json j = Json::array();
  for (Vertex v : set) j.push_back(v);
  return j;
}

Json to_json(const ColorCensus& census) {
  Json j;
  j["counts"] = census.counts;
  j["total"] = census.total;
  j["majority"] = census.total == 0 ? 0 : census.majority().index();
  return j;
}

Json to_json(const StepRecord& step) {
  Json j;
  j["round"] = step.round;
  j["step"] = step.step;
  j["color"] = step.color.index();
  j["color_count"] = step.color_count;
  j["triple_count"] = step.triple_count;
  j["part_sizes"] = step.part_sizes;
  j["edges"] = step.edges;
  j["reservoir"] = step.reservoir;
  if (step.strict_edge_bound > 0) j["strict_edge_bound"] = step.strict_edge_bound;
  return j;
}

Json to_json(const RoundRecord& round) {
  Json j;
  j["round"] = round.round;
  j["part_sizes"] = round.part_sizes;
  j["reservoir"] = round.reservoir;
  j["new_part_size"] = round.new_part_size;
  if (round.round > 1) {
    j["closing_edges"] = round.closing_edges;
    j["common_neighborhood"] = round.common_neighborhood;
    j["exhaustive_close"] = round.exhaustive_close;
  }
  if (round.strict_reservoir_bound > 0) {
    j["strict_reservoir_bound"] = round.strict_reservoir_bound;
  }
  Json steps = Json::array();
  for (const auto& s : round.steps) steps.push_back(to_json(s));
  j["steps"] = std::move(steps);
  return j;
}

Json to_json(const ExtractionTrace& trace) {
  Json j;
  j["achieved_n"] = trace.achieved_n;
  j["achieved_rounds"] = trace.achieved_rounds;
  j["achieved_c"] = trace.achieved_c;
  j["clique"] = trace.clique;
  Json rounds = Json::array();
  for (const auto& r : trace.rounds) rounds.push_back(to_json(r));
  j["rounds"] = std::move(rounds);
  return j;
}

Json to_json(const MultipartiteEmbedding& embedding) {
  Json j;
  j["color"] = embedding.color.index();
  Json parts = Json::array();
  for (const auto& p : embedding.parts) parts.push_back(to_json(p));
  j["parts"] = std::move(parts);
  return j;
}

Json to_json(const AlmostMonoResult& result) {
  Json j;
  j["subset"] = to_json(result.subset);
  j["size"] = result.subset.size();
  j["majority_color"] = result.majority_color.index();
  j["epsilon"] = result.epsilon;
  j["achieved_density"] = result.achieved_density;
  j["census"] = to_json(result.census);
  return j;
}

Json to_json(const AlmostMonoWitness& witness) {
  Json j;
  j["size"] = witness.size;
  j["subset"] = to_json(witness.subset);
  j["color"] = witness.color.index();
  j["census"] = to_json(witness.census);
  return j;
}

Json to_json(const PairColoring& coloring) {
  Json j;
  j["order"] = coloring.order;
  j["colors"] = coloring.n_colors;
  Json edges = Json::array();
  for (int b = 1; b < coloring.order; ++b) {
    for (int a = 0; a < b; ++a) edges.push_back({a, b, coloring.at(a, b)});
  }
  j["edges"] = std::move(edges);
  return j;
}

Json to_json(const ColoringSource& source) {
  Json j;
  if (source.path) j["path"] = *source.path;
  if (source.spec) j["generator"] = source.spec->to_string();
  j["n_vertices"] = source.n_vertices;
  j["colors"] = source.n_colors;
  return j;
}

ColoringSource coloring_source_from_json(const Json& j) {
  ColoringSource s;
  if (j.contains("path")) s.path = j.at("path").get<std::string>();
  if (j.contains("generator")) {
    s.spec = GeneratorSpec::parse(j.at("generator").get<std::string>());
  }
  s.n_vertices = member(j, "n_vertices").get<Vertex>();
  s.n_colors = member(j, "colors").get<int>();
  return s;
}

Json to_json(const Witness& w) {
  Json j;
  if (w.kind == Witness::Kind::kEmbedding) {
    j["kind"] = "embedding";
    j["color"] = w.embedding.color.index();
    Json parts = Json::array();
    for (const auto& p : w.embedding.parts) parts.push_back(to_json(p));
    j["parts"] = std::move(parts);
  } else {
    j["kind"] = "dense_subset";
    j["color"] = w.color.index();
    j["epsilon"] = w.epsilon;
    j["subset"] = to_json(w.subset);
  }
  if (w.source) j["coloring"] = to_json(*w.source);
  return j;
}

Witness witness_from_json(const Json& root) {
  try {
    const Json& j =
        root.is_object() && root.contains("witness") ? root.at("witness") : root;
    Witness w;
    const auto kind = member(j, "kind").get<std::string>();
    const int color = member(j, "color").get<int>();
    if (color < 0 || color >= kMaxColors) {
      fail(ErrorKind::kFormat, "witness color out of range");
    }
    if (kind == "embedding") {
      w.kind = Witness::Kind::kEmbedding;
      w.embedding.color = ColorId(color);
      for (const auto& p : member(j, "parts")) {
        w.embedding.parts.push_back(vertex_set_from_json(p));
      }
    } else if (kind == "dense_subset") {
      w.kind = Witness::Kind::kDenseSubset;
      w.color = ColorId(color);
      w.epsilon = member(j, "epsilon").get<double>();
      w.subset = vertex_set_from_json(member(j, "subset"));
    } else {
      fail(ErrorKind::kFormat, "unknown witness kind '" + kind + "'");
    }
    if (j.contains("coloring")) {
      w.source = coloring_source_from_json(j.at("coloring"));
    }
    return w;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::kFormat, std::string("malformed witness: ") + e.what());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kFormat) throw;
    fail(ErrorKind::kFormat, std::string("malformed witness: ") + e.what());
  }
}

WitnessCheck check_witness(const TripleColoring& coloring, const Witness& w) {
  WitnessCheck out;
  if (w.kind == Witness::Kind::kEmbedding) {
    const EmbeddingCheck check = verify_embedding(coloring, w.embedding);
    out.ok = check.ok;
    out.reason = check.reason;
    out.violation = check.violation;
    out.triples_checked = check.triples_checked;
    return out;
  }
  if (!w.subset.all_below(coloring.num_vertices())) {
    out.reason = "subset has a vertex outside [0, N)";
    return out;
  }
  if (w.color.index() >= coloring.num_colors()) {
    out.reason = "witness color is not in the palette";
    return out;
  }
  const ColorCensus census = color_census(coloring, w.subset);
  const std::uint64_t need = min_count_for_density(census.total, w.epsilon);
  const std::uint64_t have = census.counts[w.color.index()];
  out.triples_checked = census.total;
  out.ok = have >= need;
  if (!out.ok) {
    out.reason = "color " + std::to_string(w.color.index()) + " covers " +
                 std::to_string(have) + " of " + std::to_string(census.total) +
                 " triples, need " + std::to_string(need);
  }
  return out;
}

}  // namespace tc3
