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

#include "cli.h"

#include <sys/resource.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tc3/almost_mono.h"
#include "tc3/coloring_io.h"
#include "tc3/engine.h"
#include "tc3/generators.h"
#include "tc3/oracle.h"
#include "tc3/philox.h"
#include "tc3/report.h"

namespace tc3::cli {

namespace {

using Clock = std::chrono::steady_clock;

struct InputOptions {
  std::string in;
  std::string gen;
  Vertex n_vertices = 0;
  int colors = 2;
  std::uint64_t seed = 0;
  std::vector<std::string> params;
};

void add_input_options(CLI::App* app, InputOptions& o, bool allow_file) {
  if (allow_file) app->add_option("--in", o.in, "tc3 coloring file");
  app->add_option("--gen", o.gen, "generator: uniform | constant | blockmix");
  app->add_option("--n-vertices", o.n_vertices, "vertex count N");
  app->add_option("--colors", o.colors, "palette size l")
      ->check(CLI::Range(1, kMaxColors));
  app->add_option("--seed", o.seed, "generator seed");
  app->add_option("--param", o.params,
                  "generator parameter key=value (color for constant, m for "
                  "blockmix)");
}

GeneratorSpec spec_from(const InputOptions& o) {
  GeneratorSpec spec;
  spec.name = parse_generator_name(o.gen);
  spec.seed = o.seed;
  for (const auto& item : o.params) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      fail(ErrorKind::kInvalidArgument,
           "--param expects key=value, got '" + item + "'");
    }
    try {
      spec.params[item.substr(0, eq)] = std::stoull(item.substr(eq + 1));
    } catch (const std::exception&) {
      fail(ErrorKind::kInvalidArgument, "bad --param value in '" + item + "'");
    }
  }
  if (spec.name == GeneratorName::kConstant && spec.params.empty()) {
    spec.params["color"] = 0;
  }
  return spec;
}

struct LoadedColoring {
  TripleColoring coloring;
  ColoringSource source;
};

LoadedColoring load_input(const InputOptions& o) {
  if (!o.in.empty() && !o.gen.empty()) {
    fail(ErrorKind::kInvalidArgument, "conflicting inputs: --in and --gen");
  }
  if (o.in.empty() && o.gen.empty()) {
    fail(ErrorKind::kInvalidArgument, "no input: pass --in FILE or --gen NAME");
  }
  ColoringSource source;
  if (!o.in.empty()) {
    TripleColoring c = read_coloring(o.in);
    source.path = o.in;
    if (const auto* spec = c.generator_spec()) source.spec = *spec;
    source.n_vertices = c.num_vertices();
    source.n_colors = c.num_colors();
    return {std::move(c), std::move(source)};
  }
  if (o.n_vertices < 3) {
    fail(ErrorKind::kInvalidArgument, "--n-vertices must be at least 3");
  }
  GeneratorSpec spec = spec_from(o);
  spec.validate(o.n_vertices, o.colors);
  TripleColoring c = make_generated(spec, o.n_vertices, o.colors);
  source.spec = spec;
  source.n_vertices = o.n_vertices;
  source.n_colors = o.colors;
  return {std::move(c), std::move(source)};
}

std::uint64_t peak_memory_bytes() {
  rusage usage{};
  getrusage(RUSAGE_SELF, &usage);
  return static_cast<std::uint64_t>(usage.ru_maxrss) * 1024;
}

class Report {
 public:
  explicit Report(const std::vector<std::string>& args) : start_(Clock::now()) {
    json_["tool"] = "tc3";
    json_["format"] = 1;
    json_["command"] = args;
  }

  Json& operator[](const char* key) { return json_[key]; }

  void success() { json_["outcome"] = {{"status", "success"}}; }
  void failure(const Error& e) {
    json_["outcome"] = {{"status", "failure"},
                        {"kind", std::string(error_kind_name(e.kind()))},
                        {"message", e.what()}};
  }

  void emit(const std::string& path, std::ostream& out) {
    const std::chrono::duration<double> elapsed = Clock::now() - start_;
    json_["wall_time_seconds"] = elapsed.count();
    json_["peak_memory_bytes"] = peak_memory_bytes();
    const std::string text = json_.dump(2) + "\n";
    if (path.empty()) {
      out << text;
    } else {
      write_text(path, text);
    }
  }

  static void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) fail(ErrorKind::kInvalidArgument, "cannot write " + path);
    f << text;
    if (!f) fail(ErrorKind::kInvalidArgument, "failed writing " + path);
  }

 private:
  Json json_;
  Clock::time_point start_;
};

void write_witness(const std::string& path, const Witness& w) {
  if (!path.empty()) Report::write_text(path, to_json(w).dump(2) + "\n");
}

int exit_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::kInvalidArgument:
    case ErrorKind::kFormat:
      return kExitConfig;
    default:
      return kExitExtraction;
  }
}

std::string triple_string(const std::array<Vertex, 3>& t) {
  return "(" + std::to_string(t[0]) + ", " + std::to_string(t[1]) + ", " +
         std::to_string(t[2]) + ")";
}

// --- gen --------------------------------------------------------------------

struct GenArgs {
  InputOptions input;
  std::string out;
  bool explicit_form = false;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  InputOptions input = a.input;
  if (input.gen.empty()) fail(ErrorKind::kInvalidArgument, "gen needs --gen");
  LoadedColoring loaded = load_input(input);
  const TripleColoring coloring =
      a.explicit_form ? loaded.coloring.materialize() : loaded.coloring;
  write_coloring(coloring, a.out);
  out << "wrote " << a.out << " (" << (a.explicit_form ? "explicit" : "implicit")
      << ", N=" << coloring.num_vertices() << ", l=" << coloring.num_colors()
      << ")\n";
  return kExitOk;
}

// --- extract ----------------------------------------------------------------

struct ExtractArgs {
  InputOptions input;
  int d = 3;
  int n = 1;
  std::string mode = "adaptive";
  int r_cap = 0;
  std::size_t reservoir_cap = 65536;
  int initial_part_size = 0;
  int restarts = 32;
  std::uint64_t search_seed = 0;
  bool check_invariants = false;
  std::string report;
  std::string witness;
};

int cmd_extract(const ExtractArgs& a, const std::vector<std::string>& args,
                std::ostream& out, std::ostream& err) {
  ExtractionRequest req;
  req.d = a.d;
  req.n = a.n;
  req.mode = parse_mode(a.mode);
  req.r_cap = a.r_cap;
  req.reservoir_cap = a.reservoir_cap;
  req.initial_part_size = a.initial_part_size;
  req.dense.restarts = a.restarts;
  req.dense.seed = a.search_seed;
  req.check_invariants = a.check_invariants;
  req.validate();
  const LoadedColoring loaded = load_input(a.input);

  Report report(args);
  report["config"] = {{"d", req.d},
                      {"part_size", req.n},
                      {"mode", std::string(mode_name(req.mode))},
                      {"r_cap", req.r_cap},
                      {"reservoir_cap", req.reservoir_cap},
                      {"initial_part_size", req.initial_part_size},
                      {"restarts", req.dense.restarts},
                      {"search_seed", req.dense.seed},
                      {"check_invariants", req.check_invariants}};
  report["input"] = to_json(loaded.source);
  try {
    const Extraction x = extract_multipartite(loaded.coloring, req);
    const EmbeddingCheck check = verify_embedding(loaded.coloring, x.embedding);
    Witness w;
    w.kind = Witness::Kind::kEmbedding;
    w.embedding = x.embedding;
    w.source = loaded.source;
    std::vector<Vertex> ids;
    for (const auto& p : x.embedding.parts) {
      ids.insert(ids.end(), p.begin(), p.end());
    }
    const ColorCensus census =
        color_census(loaded.coloring, VertexSet::from_unsorted(ids));

    report.success();
    report["result"] = {{"embedding", to_json(x.embedding)},
                        {"verified", check.ok},
                        {"triples_checked", check.triples_checked}};
    report["witness"] = to_json(w);
    report["trace"] = to_json(x.trace);
    report["census"] = to_json(census);
    report.emit(a.report, out);
    write_witness(a.witness, w);
    if (!a.report.empty()) {
      out << "extract: K_" << req.d << "(" << req.n << ") in color "
          << x.embedding.color.index() << " after " << x.trace.achieved_rounds
          << " rounds, " << check.triples_checked << " triples verified\n";
    }
    return kExitOk;
  } catch (const ExtractionFailure& f) {
    report.failure(f);
    report["trace"] = to_json(f.trace());
    report.emit(a.report, out);
    err << "extract failed: " << error_kind_name(f.kind()) << ": " << f.what()
        << "\n";
    return exit_for(f);
  }
}

// --- almost-mono ------------------------------------------------------------

struct AlmostMonoArgs {
  InputOptions input;
  double epsilon = 0;
  std::string mode = "adaptive";
  int n_max = 8;
  int r_cap = 0;
  std::size_t reservoir_cap = 65536;
  int restarts = 32;
  std::uint64_t search_seed = 0;
  std::string report;
  std::string witness;
};

int cmd_almost_mono(const AlmostMonoArgs& a,
                    const std::vector<std::string>& args, std::ostream& out,
                    std::ostream& err) {
  AlmostMonoOptions opts;
  opts.mode = parse_mode(a.mode);
  opts.n_max = a.n_max;
  opts.r_cap = a.r_cap;
  opts.reservoir_cap = a.reservoir_cap;
  opts.dense.restarts = a.restarts;
  opts.dense.seed = a.search_seed;
  const int d = choose_d(a.epsilon);
  const LoadedColoring loaded = load_input(a.input);

  Report report(args);
  report["config"] = {{"epsilon", a.epsilon},
                      {"d", d},
                      {"mode", std::string(mode_name(opts.mode))},
                      {"n_max", opts.n_max},
                      {"r_cap", opts.r_cap},
                      {"reservoir_cap", opts.reservoir_cap},
                      {"restarts", opts.dense.restarts},
                      {"search_seed", opts.dense.seed}};
  report["input"] = to_json(loaded.source);
  try {
    const AlmostMonoRun run = almost_mono_subset(loaded.coloring, a.epsilon, opts);
    Witness w;
    w.kind = Witness::Kind::kDenseSubset;
    w.subset = run.result.subset;
    w.color = run.result.majority_color;
    w.epsilon = a.epsilon;
    w.source = loaded.source;
    const DensityChain chain = density_chain(run.result, run.d, run.n);

    report.success();
    Json result = to_json(run.result);
    result["d"] = run.d;
    result["n"] = run.n;
    result["embedding"] = to_json(run.extraction.embedding);
    result["density_chain"] = {
        {"census_meets_crossing", chain.census_meets_crossing},
        {"crossing_exceeds_bound", chain.crossing_exceeds_bound},
        {"bound_meets_epsilon", chain.bound_meets_epsilon}};
    report["result"] = std::move(result);
    report["witness"] = to_json(w);
    report["trace"] = to_json(run.extraction.trace);
    report["census"] = to_json(run.result.census);
    report.emit(a.report, out);
    write_witness(a.witness, w);
    if (!a.report.empty()) {
      out << "almost-mono: s=" << run.result.subset.size() << " (d=" << run.d
          << ", n=" << run.n << "), density " << run.result.achieved_density
          << ", c=" << run.extraction.trace.achieved_c << "\n";
    }
    return kExitOk;
  } catch (const ExtractionFailure& f) {
    report.failure(f);
    report["trace"] = to_json(f.trace());
    report.emit(a.report, out);
    err << "almost-mono failed: " << error_kind_name(f.kind()) << ": "
        << f.what() << "\n";
    return exit_for(f);
  }
}

// --- verify -----------------------------------------------------------------

struct VerifyArgs {
  std::string in;
  std::string witness;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  std::ifstream f(a.witness, std::ios::binary);
  if (!f) fail(ErrorKind::kInvalidArgument, "cannot read " + a.witness);
  Json j;
  try {
    j = Json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::kFormat, a.witness + ": " + e.what());
  }
  const Witness w = witness_from_json(j);

  std::optional<TripleColoring> coloring;
  if (!a.in.empty()) {
    coloring = read_coloring(a.in);
  } else if (w.source && w.source->spec) {
    coloring = make_generated(*w.source->spec, w.source->n_vertices,
                              w.source->n_colors);
  } else if (w.source && w.source->path) {
    coloring = read_coloring(*w.source->path);
  } else {
    fail(ErrorKind::kInvalidArgument,
         "the witness names no coloring; pass --in FILE");
  }

  const WitnessCheck check = check_witness(*coloring, w);
  if (check.ok) {
    out << "valid: " << check.triples_checked << " triples checked\n";
    return kExitOk;
  }
  err << "invalid: " << check.reason << "\n";
  if (check.violation) {
    out << "offending triple " << triple_string(*check.violation) << "\n";
  }
  return kExitVerification;
}

// --- oracle -----------------------------------------------------------------

struct OracleAlmostMonoArgs {
  InputOptions input;
  double epsilon = 0;
  std::uint64_t max_subsets = std::uint64_t{1} << 20;
  double time_limit = 60.0;
  std::string path = "revolving";
  std::string report;
  std::string witness;
};

int cmd_oracle_almost_mono(const OracleAlmostMonoArgs& a,
                           const std::vector<std::string>& args,
                           std::ostream& out, std::ostream& err) {
  OracleBudget budget{a.max_subsets, a.time_limit};
  budget.validate();
  if (a.epsilon < 0 || a.epsilon > 1) {
    fail(ErrorKind::kInvalidArgument, "epsilon must lie in [0, 1]");
  }
  const LoadedColoring loaded = load_input(a.input);
  Report report(args);
  report["config"] = {{"epsilon", a.epsilon},
                      {"max_subsets", budget.max_subsets},
                      {"time_limit_seconds", budget.time_limit_seconds},
                      {"path", a.path}};
  report["input"] = to_json(loaded.source);
  try {
    const AlmostMonoWitness best =
        a.path == "gray"
            ? brute_max_almost_mono_gray(loaded.coloring, a.epsilon, budget)
            : brute_max_almost_mono(loaded.coloring, a.epsilon, budget);
    Witness w;
    w.kind = Witness::Kind::kDenseSubset;
    w.subset = best.subset;
    w.color = best.color;
    w.epsilon = a.epsilon;
    w.source = loaded.source;
    report.success();
    report["result"] = to_json(best);
    report["witness"] = to_json(w);
    report.emit(a.report, out);
    write_witness(a.witness, w);
    if (!a.report.empty()) {
      out << "oracle max-almost-mono: size " << best.size << "\n";
    }
    return kExitOk;
  } catch (const Error& e) {
    report.failure(e);
    report.emit(a.report, out);
    err << "oracle failed: " << error_kind_name(e.kind()) << ": " << e.what()
        << "\n";
    return exit_for(e);
  }
}

struct OracleR2Args {
  int k = 3;
  int colors = 2;
  std::uint64_t max_nodes = std::uint64_t{1} << 20;
  double time_limit = 60.0;
  std::string report;
};

int cmd_oracle_r2(const OracleR2Args& a, const std::vector<std::string>& args,
                  std::ostream& out, std::ostream& err) {
  OracleBudget budget{a.max_nodes, a.time_limit};
  budget.validate();
  Report report(args);
  report["config"] = {{"k", a.k},
                      {"colors", a.colors},
                      {"max_nodes", budget.max_subsets},
                      {"time_limit_seconds", budget.time_limit_seconds}};
  try {
    const R2Exact r = r2_exact_small(a.k, a.colors, budget);
    report.success();
    report["result"] = {{"k", a.k},
                        {"colors", a.colors},
                        {"value", r.value},
                        {"nodes", r.nodes},
                        {"avoiding_coloring", to_json(r.witness)}};
    report.emit(a.report, out);
    if (!a.report.empty()) {
      out << "r2(" << a.k << "; " << a.colors << ") = " << r.value << "\n";
    }
    return kExitOk;
  } catch (const Error& e) {
    report.failure(e);
    report.emit(a.report, out);
    err << "oracle failed: " << error_kind_name(e.kind()) << ": " << e.what()
        << "\n";
    return exit_for(e);
  }
}

// --- experiment -------------------------------------------------------------

struct DiscrepancyArgs {
  Vertex n_vertices = 2048;
  int colors = 2;
  int subset_size = 32;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
  std::string report;
};

int cmd_discrepancy(const DiscrepancyArgs& a,
                    const std::vector<std::string>& args, std::ostream& out) {
  const DiscrepancyResult r = discrepancy_experiment(
      a.n_vertices, a.colors, a.subset_size, a.samples, a.seed);
  Report report(args);
  report["config"] = {{"n_vertices", a.n_vertices},
                      {"colors", a.colors},
                      {"subset_size", a.subset_size},
                      {"samples", a.samples},
                      {"seed", a.seed}};
  report.success();
  report["result"] = {{"max_deviation", r.max_deviation},
                      {"mean_deviation", r.mean_deviation},
                      {"worst_sample", r.worst_sample},
                      {"worst_color", r.worst_color},
                      {"worst_subset", to_json(r.worst_subset)}};
  report.emit(a.report, out);
  if (!a.report.empty()) {
    out << "discrepancy: max deviation " << r.max_deviation << " over "
        << r.samples << " samples\n";
  }
  return kExitOk;
}

}  // namespace

DiscrepancyResult discrepancy_experiment(Vertex n_vertices, int n_colors,
                                         int subset_size,
                                         std::uint64_t samples,
                                         std::uint64_t seed) {
  if (subset_size < 3 || static_cast<Vertex>(subset_size) > n_vertices) {
    fail(ErrorKind::kInvalidArgument, "subset size must lie in [3, N]");
  }
  if (samples == 0) fail(ErrorKind::kInvalidArgument, "need at least one sample");
  const TripleColoring coloring = gen_uniform(n_vertices, n_colors, seed);
  const Philox4x32 rng(seed);
  const double expected = 1.0 / n_colors;
  const auto k = static_cast<Vertex>(subset_size);

  DiscrepancyResult r;
  r.samples = samples;
  r.subset_size = subset_size;
  double sum = 0;
  std::vector<Vertex> picked;
  for (std::uint64_t m = 0; m < samples; ++m) {
    // Floyd: for j = N-k .. N-1 draw t in [0, j]; take j if t is taken.
    picked.clear();
    for (Vertex j = n_vertices - k; j < n_vertices; ++j) {
      const std::uint64_t counter = m * k + (j - (n_vertices - k));
      const auto t = static_cast<Vertex>(
          keyed_uniform(rng, counter, kStreamSubsetSampling,
                        static_cast<std::uint64_t>(j) + 1));
      const bool taken = std::find(picked.begin(), picked.end(), t) != picked.end();
      picked.push_back(taken ? j : t);
    }
    const VertexSet subset = VertexSet::from_unsorted(picked);
    const ColorCensus census = color_census(coloring, subset);
    double worst = 0;
    int worst_color = 0;
    for (int c = 0; c < n_colors; ++c) {
      const double dev = std::abs(census.fraction(ColorId(c)) - expected);
      if (dev > worst) {
        worst = dev;
        worst_color = c;
      }
    }
    sum += worst;
    if (m == 0 || worst > r.max_deviation) {
      r.max_deviation = worst;
      r.worst_sample = m;
      r.worst_color = worst_color;
      r.worst_subset = subset;
    }
  }
  r.mean_deviation = sum / static_cast<double>(samples);
  return r;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"tc3: monochromatic structure in colored triple systems", "tc3"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "write a generated coloring");
  add_input_options(gen_cmd, gen.input, false);
  gen_cmd->add_option("--out", gen.out, "output tc3 file")->required();
  gen_cmd->add_flag("--explicit", gen.explicit_form,
                    "store every color instead of the generator spec");

  ExtractArgs ex;
  auto* ex_cmd = app.add_subcommand("extract", "extract a monochromatic K_d(n)");
  add_input_options(ex_cmd, ex.input, true);
  ex_cmd->add_option("--d", ex.d, "number of parts");
  ex_cmd->add_option("--part-size", ex.n, "part size n");
  ex_cmd->add_option("--mode", ex.mode, "strict | adaptive")
      ->check(CLI::IsMember({"strict", "adaptive"}));
  ex_cmd->add_option("--r-cap", ex.r_cap, "adaptive round cap (0: default)");
  ex_cmd->add_option("--reservoir-cap", ex.reservoir_cap, "reservoir cap");
  ex_cmd->add_option("--initial-part-size", ex.initial_part_size,
                     "adaptive size of new parts (0: n)");
  ex_cmd->add_option("--restarts", ex.restarts, "greedy restarts");
  ex_cmd->add_option("--search-seed", ex.search_seed, "greedy restart seed");
  ex_cmd->add_flag("--check-invariants", ex.check_invariants,
                   "re-check invariants by enumeration after every step");
  ex_cmd->add_option("--report", ex.report, "JSON report file");
  ex_cmd->add_option("--witness", ex.witness, "standalone witness file");

  AlmostMonoArgs am;
  auto* am_cmd = app.add_subcommand("almost-mono",
                                    "find an almost monochromatic subset");
  add_input_options(am_cmd, am.input, true);
  am_cmd->add_option("--epsilon", am.epsilon, "allowed fraction of off-color "
                     "triples, in (0, 1]")->required();
  am_cmd->add_option("--mode", am.mode, "strict | adaptive")
      ->check(CLI::IsMember({"strict", "adaptive"}));
  am_cmd->add_option("--n-max", am.n_max, "largest part size tried");
  am_cmd->add_option("--r-cap", am.r_cap, "adaptive round cap (0: default)");
  am_cmd->add_option("--reservoir-cap", am.reservoir_cap, "reservoir cap");
  am_cmd->add_option("--restarts", am.restarts, "greedy restarts");
  am_cmd->add_option("--search-seed", am.search_seed, "greedy restart seed");
  am_cmd->add_option("--report", am.report, "JSON report file");
  am_cmd->add_option("--witness", am.witness, "standalone witness file");

  VerifyArgs ver;
  auto* ver_cmd = app.add_subcommand("verify", "re-check a witness");
  ver_cmd->add_option("--in", ver.in, "tc3 coloring file (default: the "
                      "coloring named by the witness)");
  ver_cmd->add_option("--witness", ver.witness, "witness or report JSON")
      ->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force ground truth");
  oracle_cmd->require_subcommand(1);
  OracleAlmostMonoArgs oam;
  auto* oam_cmd = oracle_cmd->add_subcommand(
      "max-almost-mono", "largest almost monochromatic subset, exhaustively");
  add_input_options(oam_cmd, oam.input, true);
  oam_cmd->add_option("--epsilon", oam.epsilon, "threshold in [0, 1]")
      ->required();
  oam_cmd->add_option("--max-subsets", oam.max_subsets, "subset budget");
  oam_cmd->add_option("--time-limit", oam.time_limit, "seconds");
  oam_cmd->add_option("--path", oam.path, "revolving | gray")
      ->check(CLI::IsMember({"revolving", "gray"}));
  oam_cmd->add_option("--report", oam.report, "JSON report file");
  oam_cmd->add_option("--witness", oam.witness, "standalone witness file");
  OracleR2Args r2;
  auto* r2_cmd = oracle_cmd->add_subcommand("r2", "exact small r2(k; l)");
  r2_cmd->add_option("--k", r2.k, "clique size")->check(CLI::Range(1, 8));
  r2_cmd->add_option("--colors", r2.colors, "palette size")
      ->check(CLI::Range(1, kMaxColors));
  r2_cmd->add_option("--max-nodes", r2.max_nodes, "search node budget");
  r2_cmd->add_option("--time-limit", r2.time_limit, "seconds");
  r2_cmd->add_option("--report", r2.report, "JSON report file");

  auto* exp_cmd = app.add_subcommand("experiment", "seeded experiments");
  exp_cmd->require_subcommand(1);
  DiscrepancyArgs disc;
  auto* disc_cmd = exp_cmd->add_subcommand(
      "discrepancy", "color-fraction deviation on random subsets");
  disc_cmd->add_option("--n-vertices", disc.n_vertices, "vertex count N");
  disc_cmd->add_option("--colors", disc.colors, "palette size l")
      ->check(CLI::Range(1, kMaxColors));
  disc_cmd->add_option("--subset-size", disc.subset_size, "subset size k");
  disc_cmd->add_option("--samples", disc.samples, "number of subsets M");
  disc_cmd->add_option("--seed", disc.seed, "seed");
  disc_cmd->add_option("--report", disc.report, "JSON report file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)
               ? kExitOk
               : kExitConfig;
  }

  try {
    if (gen_cmd->parsed()) return cmd_gen(gen, out);
    if (ex_cmd->parsed()) return cmd_extract(ex, args, out, err);
    if (am_cmd->parsed()) return cmd_almost_mono(am, args, out, err);
    if (ver_cmd->parsed()) return cmd_verify(ver, out, err);
    if (oam_cmd->parsed()) return cmd_oracle_almost_mono(oam, args, out, err);
    if (r2_cmd->parsed()) return cmd_oracle_r2(r2, args, out, err);
    if (disc_cmd->parsed()) return cmd_discrepancy(disc, args, out);
  } catch (const Error& e) {
    err << "error: " << error_kind_name(e.kind()) << ": " << e.what() << "\n";
    return e.kind() == ErrorKind::kInvalidArgument ||
                   e.kind() == ErrorKind::kFormat ||
                   e.kind() == ErrorKind::kPreconditionViolated
               ? kExitConfig
               : kExitExtraction;
  }
  return kExitConfig;
}

}  // namespace tc3::cli
