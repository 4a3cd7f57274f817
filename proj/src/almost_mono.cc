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

#include "tc3/almost_mono.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "tc3/oracle.h"

namespace tc3 {

namespace {

constexpr double kEpsilonSlack = 1e-12;

using u128 = unsigned __int128;

AlmostMonoResult make_result(const TripleColoring& coloring,
                             const MultipartiteEmbedding& embedding,
                             double epsilon) {
  std::vector<Vertex> ids;
  for (const auto& part : embedding.parts) {
    ids.insert(ids.end(), part.begin(), part.end());
  }
  AlmostMonoResult r;
  r.subset = VertexSet::from_unsorted(std::move(ids));
  r.census = color_census(coloring, r.subset);
  r.majority_color = r.census.majority();
  r.epsilon = epsilon;
  r.achieved_density = r.census.fraction(r.majority_color);
  return r;
}

}  // namespace

int choose_d(double epsilon) {
  if (!(epsilon > 0.0) || epsilon > 1.0) {
    fail(ErrorKind::kInvalidArgument, "epsilon must lie in (0, 1]");
  }
  const double ratio = 3.0 / epsilon;
  const double rounded = std::round(ratio);
  const double d = std::abs(ratio - rounded) < 1e-9 ? rounded : std::ceil(ratio);
  return std::max(3, static_cast<int>(d));
}

AlmostMonoRun almost_mono_subset(const TripleColoring& coloring,
                                 double epsilon,
                                 const AlmostMonoOptions& options) {
  const int d = choose_d(epsilon);
  ExtractionRequest request;
  request.d = d;
  request.mode = options.mode;
  request.r_cap = options.r_cap;
  request.reservoir_cap = options.reservoir_cap;
  request.dense = options.dense;

  std::optional<AlmostMonoRun> best;
  auto attempt = [&](int n) {
    request.n = n;
    AlmostMonoRun run;
    run.d = d;
    run.n = n;
    run.extraction = extract_multipartite(coloring, request);
    run.result = make_result(coloring, run.extraction.embedding, epsilon);
    return run;
  };

  if (options.mode == ExtractionMode::kStrict) {
    const R2Bound bound = r2_upper_bound(d - 1, coloring.num_colors());
    const double sqrt_log_n =
        std::sqrt(std::log2(static_cast<double>(coloring.num_vertices())));
    std::size_t n = 0;
    if (!bound.saturated && bound.value <= 64) {
      n = strict_part_size(sqrt_log_n, coloring.num_colors(),
                           static_cast<int>(bound.value));
    }
    // n = 0 is rejected by request validation; let the engine name the
    // underflow instead.
    return attempt(static_cast<int>(std::max<std::size_t>(n, 1)));
  }

  const int n_max = std::max(1, std::min(options.n_max, kMaxSignatureWidth));
  for (int n = 1; n <= n_max; ++n) {
    try {
      best = attempt(n);
    } catch (const ExtractionFailure&) {
      if (!best) throw;
      break;
    }
  }
  return std::move(*best);
}

DensityChain density_chain(const AlmostMonoResult& result, int d, int n) {
  DensityChain chain;
  const auto dd = static_cast<std::uint64_t>(d);
  const auto nn = static_cast<std::uint64_t>(n);
  const u128 crossing = static_cast<u128>(choose3(dd)) * nn * nn * nn;
  const u128 all = choose3(dd * nn);
  const u128 count = result.census.counts[result.majority_color.index()];
  const u128 total = result.census.total;
  // count/total >= crossing/all
  chain.census_meets_crossing = count * all >= crossing * total;
  // crossing/all > (d-3)/d
  chain.crossing_exceeds_bound = crossing * dd > all * (dd - 3);
  // 3/d <= eps
  chain.bound_meets_epsilon =
      3.0 <= result.epsilon * static_cast<double>(d) + kEpsilonSlack;
  return chain;
}

}  // namespace tc3
