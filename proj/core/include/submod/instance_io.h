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

#ifndef SUBMOD_INSTANCE_IO_H_
#define SUBMOD_INSTANCE_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"
#include "submod/instance.h"

namespace submod {

// Instance files are UTF-8 JSON documents with top-level keys
// {n, label, matroid, function}, e.g.
//
//   {"n":3,"label":"tri",
//    "matroid":{"kind":"graphic","num_vertices":3,
//               "edges":[[0,1],[1,2],[0,2]]},
//    "function":{"kind":"coverage","universe_weights":[1,1,1],
//                "covers":[[0,1],[1,2],[2]]}}
//
// Matroid kinds: uniform {k}, partition {parts, capacities},
// graphic {num_vertices, edges}. Function kinds: modular {weights},
// coverage / weighted_coverage {universe_weights, covers},
// concave_of_modular {weights, exponent = 0.5}. For kind "coverage",
// universe_weights may be omitted and defaults to unit weights over the
// items mentioned in covers. Integral weights are written as JSON integers.

nlohmann::json InstanceToJson(const Instance& instance);

// Throws InstanceError with the dotted path of the bad field. The result is
// validated.
Instance InstanceFromJson(const nlohmann::json& doc);

// Syntax errors are reported as InstanceError with "line L, column C".
Instance ParseInstance(std::string_view text);

std::string SerializeInstance(const Instance& instance);

Instance LoadInstance(const std::filesystem::path& path);
void SaveInstance(const Instance& instance, const std::filesystem::path& path);

}  // namespace submod

#endif  // SUBMOD_INSTANCE_IO_H_
