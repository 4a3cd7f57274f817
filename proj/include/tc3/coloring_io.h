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
#include <filesystem>
#include <string>
#include <string_view>

#include "tc3/errors.h"
#include "tc3/model.h"

namespace tc3 {

// tc3 text format, version 1:
//
//   tc3 1 explicit N=<int> l=<int>
//   <C(N,3) base-16 digits in colex rank order, 64 per line>
//
//   tc3 1 implicit N=<int> l=<int> gen=<name> seed=<u64> params=<k:v,...>
//
// Writing is deterministic: equal colorings produce identical bytes.

enum class FormatProblem {
  kMalformedHeader,
  kVersionMismatch,
  kTruncatedPayload,
  kBadPayload,
  kIo,
};

std::string_view format_problem_name(FormatProblem problem);

class FormatError : public Error {
 public:
  FormatError(FormatProblem problem, std::uint64_t offset,
              const std::string& message)
      : Error(ErrorKind::kFormat, message), problem_(problem), offset_(offset) {}

  FormatProblem problem() const { return problem_; }
  // Byte offset into the file where the problem was detected.
  std::uint64_t offset() const { return offset_; }

 private:
  FormatProblem problem_;
  std::uint64_t offset_;
};

std::string serialize_coloring(const TripleColoring& coloring);
TripleColoring parse_coloring(std::string_view text);

void write_coloring(const TripleColoring& coloring,
                    const std::filesystem::path& path);
TripleColoring read_coloring(const std::filesystem::path& path);

}  // namespace tc3
