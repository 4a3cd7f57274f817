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

#include <charconv>
#include <sstream>

#include "tc3/errors.h"
#include "tc3/model.h"

namespace tc3 {

std::string_view generator_name(GeneratorName name) {
  switch (name) {
    case GeneratorName::kUniform: return "uniform";
    case GeneratorName::kConstant: return "constant";
    case GeneratorName::kBlockmix: return "blockmix";
  }
  return "?";
}

GeneratorName parse_generator_name(std::string_view text) {
  if (text == "uniform") return GeneratorName::kUniform;
  if (text == "constant") return GeneratorName::kConstant;
  if (text == "blockmix") return GeneratorName::kBlockmix;
  fail(ErrorKind::kInvalidArgument,
       "unknown generator '" + std::string(text) + "'");
}

namespace {

std::uint64_t parse_u64(std::string_view text, const char* what) {
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    fail(ErrorKind::kInvalidArgument,
         std::string("bad integer for ") + what + ": '" + std::string(text) +
             "'");
  }
  return value;
}

std::uint64_t param_or_throw(const GeneratorSpec& spec, const char* key) {
  auto it = spec.params.find(key);
  if (it == spec.params.end()) {
    fail(ErrorKind::kInvalidArgument,
         std::string("generator '") + std::string(generator_name(spec.name)) +
             "' needs param '" + key + "'");
  }
  return it->second;
}

}  // namespace

void GeneratorSpec::validate(Vertex n_vertices, int n_colors) const {
  auto only = [&](std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : params) {
      bool known = false;
      for (const char* a : allowed) known = known || key == a;
      if (!known) {
        fail(ErrorKind::kInvalidArgument,
             "unknown param '" + key + "' for generator '" +
                 std::string(generator_name(name)) + "'");
      }
    }
  };
  switch (name) {
    case GeneratorName::kUniform:
      only({});
      break;
    case GeneratorName::kConstant: {
      only({"color"});
      const auto color = param_or_throw(*this, "color");
      if (color >= static_cast<std::uint64_t>(n_colors)) {
        fail(ErrorKind::kInvalidArgument, "constant color out of range");
      }
      break;
    }
    case GeneratorName::kBlockmix: {
      only({"m"});
      const auto m = param_or_throw(*this, "m");
      if (m < 1 || m > n_vertices) {
        fail(ErrorKind::kInvalidArgument, "blockmix needs 1 <= m <= N");
      }
      break;
    }
  }
}

std::string GeneratorSpec::params_string() const {
  std::string out;
  for (const auto& [key, value] : params) {
    if (!out.empty()) out += ',';
    out += key;
    out += ':';
    out += std::to_string(value);
  }
  return out;
}

std::string GeneratorSpec::to_string() const {
  return "gen=" + std::string(generator_name(name)) +
         " seed=" + std::to_string(seed) + " params=" + params_string();
}

GeneratorSpec GeneratorSpec::parse(std::string_view text) {
  GeneratorSpec spec;
  bool have_gen = false, have_seed = false, have_params = false;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) {
      fail(ErrorKind::kInvalidArgument, "expected key=value, got '" + token + "'");
    }
    const std::string key = token.substr(0, eq);
    const std::string_view value = std::string_view(token).substr(eq + 1);
    if (key == "gen") {
      spec.name = parse_generator_name(value);
      have_gen = true;
    } else if (key == "seed") {
      spec.seed = parse_u64(value, "seed");
      have_seed = true;
    } else if (key == "params") {
      have_params = true;
      std::string_view rest = value;
      while (!rest.empty()) {
        const auto comma = rest.find(',');
        const auto item = rest.substr(0, comma);
        const auto colon = item.find(':');
        if (colon == std::string_view::npos || colon == 0) {
          fail(ErrorKind::kInvalidArgument,
               "bad param '" + std::string(item) + "'");
        }
        const std::string pkey(item.substr(0, colon));
        if (spec.params.count(pkey) != 0) {
          fail(ErrorKind::kInvalidArgument, "duplicate param '" + pkey + "'");
        }
        spec.params[pkey] = parse_u64(item.substr(colon + 1), "param");
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
      }
    } else {
      fail(ErrorKind::kInvalidArgument, "unknown field '" + key + "'");
    }
  }
  if (!have_gen || !have_seed || !have_params) {
    fail(ErrorKind::kInvalidArgument,
         "generator spec needs gen=, seed= and params=");
  }
  return spec;
}

// ---------------------------------------------------------------------------
// KeyedPermutation

KeyedPermutation::KeyedPermutation(std::uint64_t seed, std::uint64_t domain,
                                   std::uint32_t stream)
    : rng_(seed), domain_(domain), stream_(stream) {
  int bits = std::max(2, bits_for(domain));
  if (bits % 2 != 0) ++bits;
  half_bits_ = bits / 2;
  half_mask_ = (std::uint64_t{1} << half_bits_) - 1;
}

std::uint64_t KeyedPermutation::feistel(std::uint64_t x) const {
  std::uint64_t left = x >> half_bits_;
  std::uint64_t right = x & half_mask_;
  for (std::uint64_t round = 0; round < 4; ++round) {
    const std::uint64_t f = rng_((round << 32) | right, stream_, 0)[0];
    const std::uint64_t next = left ^ (f & half_mask_);
    left = right;
    right = next;
  }
  return (left << half_bits_) | right;
}

std::uint64_t KeyedPermutation::operator()(std::uint64_t x) const {
  std::uint64_t y = feistel(x);
  while (y >= domain_) y = feistel(y);
  return y;
}

// ---------------------------------------------------------------------------
// ImplicitGenerator

ImplicitGenerator::ImplicitGenerator(GeneratorSpec spec, Vertex n_vertices,
                                     int n_colors)
    : spec_(std::move(spec)), n_colors_(n_colors), rng_(spec_.seed) {
  spec_.validate(n_vertices, n_colors);
  if (spec_.name == GeneratorName::kConstant) {
    constant_color_ = static_cast<int>(spec_.params.at("color"));
  }
  if (spec_.name == GeneratorName::kBlockmix) {
    const std::uint64_t m = spec_.params.at("m");
    const KeyedPermutation perm(spec_.seed, n_vertices,
                                kStreamBlockPermutation);
    auto blocks = std::make_shared<std::vector<std::uint32_t>>(n_vertices);
    for (Vertex v = 0; v < n_vertices; ++v) {
      (*blocks)[v] = static_cast<std::uint32_t>(perm(v) % m);
    }
    blocks_ = std::move(blocks);
  }
}

std::uint32_t ImplicitGenerator::block_of(Vertex v) const {
  return blocks_ ? (*blocks_).at(v) : 0;
}

// ---------------------------------------------------------------------------
// Factories

TripleColoring make_generated(const GeneratorSpec& spec, Vertex n_vertices,
                              int n_colors) {
  if (n_vertices < 3) {
    fail(ErrorKind::kInvalidArgument, "generators need N >= 3");
  }
  return TripleColoring::implicit_coloring(spec, n_vertices, n_colors);
}

TripleColoring gen_uniform(Vertex n_vertices, int n_colors,
                           std::uint64_t seed) {
  return make_generated({GeneratorName::kUniform, seed, {}}, n_vertices,
                        n_colors);
}

TripleColoring gen_constant(Vertex n_vertices, int n_colors, int color) {
  if (color < 0) fail(ErrorKind::kInvalidArgument, "negative color");
  return make_generated(
      {GeneratorName::kConstant, 0, {{"color", static_cast<std::uint64_t>(color)}}},
      n_vertices, n_colors);
}

TripleColoring gen_blockmix(Vertex n_vertices, int n_colors,
                            std::uint64_t seed, std::uint64_t blocks) {
  return make_generated({GeneratorName::kBlockmix, seed, {{"m", blocks}}},
                        n_vertices, n_colors);
}

}  // namespace tc3
