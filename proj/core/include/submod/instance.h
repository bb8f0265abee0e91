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

#ifndef SUBMOD_INSTANCE_H_
#define SUBMOD_INSTANCE_H_

#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "submod/oracle.h"

namespace submod {

struct UniformSpec {
  int k = 1;
  friend bool operator==(const UniformSpec&, const UniformSpec&) = default;
};

struct PartitionSpec {
  std::vector<std::vector<ElementId>> parts;
  std::vector<int> capacities;
  friend bool operator==(const PartitionSpec&, const PartitionSpec&) = default;
};

struct GraphicSpec {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;
  friend bool operator==(const GraphicSpec&, const GraphicSpec&) = default;
};

using MatroidSpec = std::variant<UniformSpec, PartitionSpec, GraphicSpec>;

struct ModularSpec {
  std::vector<double> weights;
  friend bool operator==(const ModularSpec&, const ModularSpec&) = default;
};

// Serialized as kind "coverage" or "weighted_coverage"; both evaluate the
// same way. `weighted` only records which kind the file used.
struct CoverageSpec {
  bool weighted = false;
  std::vector<double> universe_weights;
  std::vector<std::vector<int>> covers;
  friend bool operator==(const CoverageSpec&, const CoverageSpec&) = default;
};

struct ConcaveOfModularSpec {
  static constexpr double kDefaultExponent = 0.5;

  std::vector<double> weights;
  double exponent = kDefaultExponent;
  friend bool operator==(const ConcaveOfModularSpec&,
                         const ConcaveOfModularSpec&) = default;
};

using FunctionSpec =
    std::variant<ModularSpec, CoverageSpec, ConcaveOfModularSpec>;

struct Instance {
  ElementId n = 0;
  MatroidSpec matroid;
  FunctionSpec function;
  std::string label;

  friend bool operator==(const Instance&, const Instance&) = default;
};

std::string KindName(const MatroidSpec& spec);
std::string KindName(const FunctionSpec& spec);

// Throws InstanceError naming the offending field.
void Validate(const Instance& instance);

// Rank of the instance's matroid. Requires a valid instance.
int InstanceRank(const Instance& instance);

// True when every value the function can take is an integer (modular and
// coverage families with integer weights). Such instances admit exact
// comparisons.
bool IsIntegerValued(const Instance& instance);

// Oracles for one run; f and m share `counts`.
struct Oracles {
  SetFunction f;
  Matroid m;
  std::shared_ptr<OracleCounts> counts;
};

// Validates, then realizes the specs as oracles.
Oracles Build(const Instance& instance);

}  // namespace submod

#endif  // SUBMOD_INSTANCE_H_
