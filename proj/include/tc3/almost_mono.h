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

// Almost-monochromatic subsets from monochromatic multipartite hypergraphs.
//
// K_d(n) has C(d,3) n^3 crossing triples out of C(dn,3), a fraction above
// 1 - 3/d, so the union of a monochromatic K_d(n) with d = ceil(3/eps) has a
// color on at least (1 - eps) C(dn,3) of its triples.

#pragma once

#include "tc3/engine.h"
#include "tc3/model.h"

namespace tc3 {

struct AlmostMonoResult {
  VertexSet subset;
  ColorId majority_color;
  ColorCensus census;
  double epsilon = 0;
  double achieved_density = 0;
};

// max(3, ceil(3/eps)). Throws kInvalidArgument unless 0 < eps <= 1.
int choose_d(double epsilon);

struct AlmostMonoOptions {
  ExtractionMode mode = ExtractionMode::kAdaptive;
  // Adaptive mode tries n = 1, 2, ... up to n_max and keeps the last
  // success. Strict mode takes the largest n its schedule allows.
  int n_max = 8;
  int r_cap = 0;
  std::size_t reservoir_cap = 65536;
  DenseSearchOptions dense;
};

struct AlmostMonoRun {
  AlmostMonoResult result;
  int d = 0;
  int n = 0;
  Extraction extraction;
};

// Throws ExtractionFailure when no part size succeeds.
AlmostMonoRun almost_mono_subset(const TripleColoring& coloring,
                                 double epsilon,
                                 const AlmostMonoOptions& options = {});

// The three links of count/total >= C(d,3)n^3/C(dn,3) > 1 - 3/d >= 1 - eps,
// each decided in exact integer arithmetic (the last up to a 1e-12 slack on
// the decimal eps).
struct DensityChain {
  bool census_meets_crossing = false;
  bool crossing_exceeds_bound = false;
  bool bound_meets_epsilon = false;

  bool holds() const {
    return census_meets_crossing && crossing_exceeds_bound &&
           bound_meets_epsilon;
  }
};

DensityChain density_chain(const AlmostMonoResult& result, int d, int n);

}  // namespace tc3
