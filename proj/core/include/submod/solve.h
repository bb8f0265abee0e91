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

#ifndef SUBMOD_SOLVE_H_
#define SUBMOD_SOLVE_H_

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "submod/algorithms.h"
#include "submod/parameters.h"

namespace submod {

struct RunReport {
  std::string algorithm;
  ElementSet solution;
  // f(solution), evaluated once more after the algorithm finishes.
  double value = 0;
  // Queries issued by this run alone.
  OracleCounts counts;
  std::optional<Parameters> parameters;
  std::optional<std::uint64_t> seed;
  std::chrono::duration<double> elapsed{0};
};

// Names accepted by Solve, in a fixed order.
const std::vector<std::string>& AlgorithmNames();

struct SolveOptions {
  double x = kDefaultX;
  // Overrides the split probability derived from x.
  std::optional<double> p;
  std::uint64_t seed = 0;
};

// Best single element, by exhaustive search over independent singletons.
// This is optimal when rank(m) = 1.
ElementSet BestSingleton(const SetFunction& f, const Matroid& m);

// Split with p from x (or options.p), grow both halves with residual random
// greedy on the contracted matroids using seeds `seed` and `seed + 1`, and
// keep the better base (A on ties). Rank 1 falls back to BestSingleton.
RunReport SplitAndGrow(const SetFunction& f, const Matroid& m,
                       const SolveOptions& options = {});

// As SplitAndGrow, with residual parallel greedy in place of the random
// variant: A is grown starting from residue B and vice versa. Fully
// deterministic.
RunReport SplitAndGrowDeterministic(const SetFunction& f, const Matroid& m,
                                    const SolveOptions& options = {});

// Dispatches on `algorithm`, one of AlgorithmNames():
//   greedy    classical greedy
//   split     Split alone; the solution is A u B
//   rrgreedy  residual random greedy
//   rpgreedy  residual parallel greedy from the lexicographically first base
//   msg       SplitAndGrow
//   msg-det   SplitAndGrowDeterministic
// Every algorithm returns BestSingleton when rank(m) = 1. Throws
// std::invalid_argument for an unknown name.
RunReport Solve(const SetFunction& f, const Matroid& m,
                const std::string& algorithm, const SolveOptions& options = {});

// Round-trips every field exactly.
nlohmann::json RunReportToJson(const RunReport& report);
RunReport RunReportFromJson(const nlohmann::json& doc);

}  // namespace submod

#endif  // SUBMOD_SOLVE_H_
