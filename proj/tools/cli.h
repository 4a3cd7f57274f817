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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "tc3/model.h"

namespace tc3::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 2,
  kExitExtraction = 3,
  kExitVerification = 4,
};

// Runs one tc3 command line (without the program name). Reports go to the
// --report file when given, else to `out`; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

struct DiscrepancyResult {
  std::uint64_t samples = 0;
  int subset_size = 0;
  double max_deviation = 0;   // max over samples and colors of |f - 1/l|
  double mean_deviation = 0;  // mean over samples of the per-sample max
  std::uint64_t worst_sample = 0;
  int worst_color = 0;
  VertexSet worst_subset;
};

// Samples `samples` uniform k-subsets of gen_uniform(N, l, seed), each drawn
// by Floyd's method from its own counter range of a dedicated Philox stream.
DiscrepancyResult discrepancy_experiment(Vertex n_vertices, int n_colors,
                                         int subset_size,
                                         std::uint64_t samples,
                                         std::uint64_t seed);

}  // namespace tc3::cli
