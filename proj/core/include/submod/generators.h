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

#ifndef SUBMOD_GENERATORS_H_
#define SUBMOD_GENERATORS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "submod/instance.h"

namespace submod {

// Deterministic catalog of small instances used by the verification suite.
// For every n in [2, max_n] it crosses uniform, partition and graphic
// matroids of rank 2..max_k with modular, coverage, weighted coverage and
// concave-of-modular functions built from fixed small integer weights.
// Every instance has rank >= 2; max_k < 2 yields an empty list.
// Requires max_n <= 10 and max_k <= 4.
std::vector<Instance> EnumerateSmallInstances(int max_n, int max_k);

enum class MatroidKind { kUniform, kPartition, kGraphic };
enum class FunctionKind {
  kModular,
  kCoverage,
  kWeightedCoverage,
  kConcaveOfModular
};

MatroidKind ParseMatroidKind(const std::string& name);
FunctionKind ParseFunctionKind(const std::string& name);

struct RandomInstanceOptions {
  MatroidKind matroid = MatroidKind::kPartition;
  FunctionKind function = FunctionKind::kWeightedCoverage;
  // Target rank, clamped to n.
  int rank = 2;
  // Coverage universe size; 0 means n.
  int universe_size = 0;
};

// Random instance reproducible from `seed`:
//  - uniform: U(n, k);
//  - partition: k nonempty parts of capacity 1, the first k elements of a
//    random permutation seed the parts and the rest join uniform parts;
//  - graphic: a random recursive spanning tree on k + 1 vertices plus
//    uniform random extra edges, edge order shuffled (rank exactly k);
//  - modular / concave weights and weighted-coverage universe weights are
//    uniform integers in [1, 10]; each element covers 1 to 3 distinct
//    uniform universe items; concave exponent 0.5.
// Throws std::invalid_argument for n < 2 or rank < 1.
Instance RandomInstance(std::uint64_t seed, ElementId n,
                        const RandomInstanceOptions& options);

}  // namespace submod

#endif  // SUBMOD_GENERATORS_H_
