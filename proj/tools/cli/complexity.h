// Copyright 2026 The Authors.
//
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

#ifndef SUBMOD_TOOLS_CLI_COMPLEXITY_H_
#define SUBMOD_TOOLS_CLI_COMPLEXITY_H_

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "submod/generators.h"

namespace submod::cli {

struct ComplexityOptions {
  std::vector<int> n_grid = {20, 40, 80};
  std::vector<int> k_grid = {4, 8};
  std::vector<std::uint64_t> seeds = {0, 1, 2};
  RandomInstanceOptions instance;  // rank is taken from k_grid
  int jobs = 1;
};

// One msg-det run. `note` is non-empty when the cell was skipped.
struct ComplexityRow {
  int n = 0;
  int k = 0;
  std::uint64_t seed = 0;
  std::int64_t value_queries = 0;
  std::int64_t independence_queries = 0;
  // value_queries / (n k^2).
  double value_constant = 0;
  double independence_constant = 0;
  std::string note;

  friend bool operator==(const ComplexityRow&, const ComplexityRow&) = default;
};

// Per (n, k): averages over the seeds that ran.
struct ComplexityCell {
  int n = 0;
  int k = 0;
  int runs = 0;
  double mean_value_queries = 0;
  double mean_value_constant = 0;

  friend bool operator==(const ComplexityCell&,
                         const ComplexityCell&) = default;
};

struct ComplexityReport {
  std::vector<ComplexityRow> rows;
  std::vector<ComplexityCell> cells;
  // Largest over smallest mean_value_constant across cells.
  double constant_spread = 0;

  friend bool operator==(const ComplexityReport&,
                         const ComplexityReport&) = default;
};

// Generates RandomInstance(seed, n, rank = k) for every grid point (k > n
// is skipped with a note) and runs msg-det on it. Throws
// std::invalid_argument for an empty grid or non-positive entries.
ComplexityReport MeasureComplexity(const ComplexityOptions& options);

std::string ComplexityCsv(const ComplexityReport& report);
nlohmann::json ComplexityToJson(const ComplexityReport& report);
ComplexityReport ComplexityFromJson(const nlohmann::json& doc);

}  // namespace submod::cli

#endif  // SUBMOD_TOOLS_CLI_COMPLEXITY_H_
