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

#include "submod/instance.h"

#include <cmath>
#include <string>

#include "submod/errors.h"
#include "submod/functions.h"
#include "submod/matroids.h"
#include "overloaded.h"

namespace submod {
namespace {

using internal::Overloaded;

void CheckWeights(const std::vector<double>& w, const std::string& field) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!std::isfinite(w[i]) || w[i] < 0) {
      throw InstanceError(field + "[" + std::to_string(i) + "]",
                          "weight must be finite and >= 0");
    }
  }
}

void CheckLength(std::size_t got, ElementId n, const std::string& field) {
  if (got != static_cast<std::size_t>(n)) {
    throw InstanceError(field, "expected " + std::to_string(n) +
                                   " entries, got " + std::to_string(got));
  }
}

bool AllIntegers(const std::vector<double>& w) {
  for (double x : w) {
    if (x != std::floor(x) || std::fabs(x) > 1e15) return false;
  }
  return true;
}

void ValidateMatroid(const MatroidSpec& spec, ElementId n) {
  std::visit(
      Overloaded{
          [&](const UniformSpec& u) {
            if (u.k < 1 || u.k > n) {
              throw InstanceError("matroid.k", "need 1 <= k <= n");
            }
          },
          [&](const PartitionSpec& p) {
            if (p.parts.size() != p.capacities.size()) {
              throw InstanceError("matroid.capacities",
                                  "length differs from number of parts");
            }
            std::vector<int> seen(n, 0);
            long rank = 0;
            for (std::size_t i = 0; i < p.parts.size(); ++i) {
              const std::string field =
                  "matroid.parts[" + std::to_string(i) + "]";
              for (ElementId u : p.parts[i]) {
                if (u < 0 || u >= n) {
                  throw InstanceError(field, "element " + std::to_string(u) +
                                                 " out of range");
                }
                if (seen[u]++) {
                  throw InstanceError(field, "element " + std::to_string(u) +
                                                 " appears twice");
                }
              }
              int cap = p.capacities[i];
              if (cap < 0 || cap > static_cast<int>(p.parts[i].size())) {
                throw InstanceError(
                    "matroid.capacities[" + std::to_string(i) + "]",
                    "capacity must be in [0, part size]");
              }
              rank += cap;
            }
            for (ElementId u = 0; u < n; ++u) {
              if (!seen[u]) {
                throw InstanceError("matroid.parts", "element " +
                                                         std::to_string(u) +
                                                         " is in no part");
              }
            }
            if (rank < 1) {
              throw InstanceError("matroid.capacities", "rank must be >= 1");
            }
          },
          [&](const GraphicSpec& g) {
            if (g.num_vertices < 1) {
              throw InstanceError("matroid.num_vertices", "must be >= 1");
            }
            CheckLength(g.edges.size(), n, "matroid.edges");
            for (std::size_t i = 0; i < g.edges.size(); ++i) {
              auto [a, b] = g.edges[i];
              if (a < 0 || a >= g.num_vertices || b < 0 ||
                  b >= g.num_vertices) {
                throw InstanceError(
                    "matroid.edges[" + std::to_string(i) + "]",
                    "endpoint out of range");
              }
            }
            if (GraphicRank(g.num_vertices, g.edges) < 1) {
              throw InstanceError("matroid.edges", "rank must be >= 1");
            }
          },
      },
      spec);
}

void ValidateFunction(const FunctionSpec& spec, ElementId n) {
  std::visit(
      Overloaded{
          [&](const ModularSpec& m) {
            CheckLength(m.weights.size(), n, "function.weights");
            CheckWeights(m.weights, "function.weights");
          },
          [&](const CoverageSpec& c) {
            CheckLength(c.covers.size(), n, "function.covers");
            CheckWeights(c.universe_weights, "function.universe_weights");
            const int universe = static_cast<int>(c.universe_weights.size());
            for (std::size_t i = 0; i < c.covers.size(); ++i) {
              for (int item : c.covers[i]) {
                if (item < 0 || item >= universe) {
                  throw InstanceError(
                      "function.covers[" + std::to_string(i) + "]",
                      "universe item " + std::to_string(item) +
                          " out of range");
                }
              }
            }
          },
          [&](const ConcaveOfModularSpec& c) {
            CheckLength(c.weights.size(), n, "function.weights");
            CheckWeights(c.weights, "function.weights");
            if (!(c.exponent > 0 && c.exponent <= 1)) {
              throw InstanceError("function.exponent", "must be in (0, 1]");
            }
          },
      },
      spec);
}

}  // namespace

std::string KindName(const MatroidSpec& spec) {
  return std::visit(Overloaded{
                        [](const UniformSpec&) { return "uniform"; },
                        [](const PartitionSpec&) { return "partition"; },
                        [](const GraphicSpec&) { return "graphic"; },
                    },
                    spec);
}

std::string KindName(const FunctionSpec& spec) {
  return std::visit(
      Overloaded{
          [](const ModularSpec&) { return "modular"; },
          [](const CoverageSpec& c) {
            return c.weighted ? "weighted_coverage" : "coverage";
          },
          [](const ConcaveOfModularSpec&) { return "concave_of_modular"; },
      },
      spec);
}

void Validate(const Instance& instance) {
  if (instance.n < 1) throw InstanceError("n", "must be >= 1");
  ValidateMatroid(instance.matroid, instance.n);
  ValidateFunction(instance.function, instance.n);
}

int InstanceRank(const Instance& instance) {
  return std::visit(
      Overloaded{
          [](const UniformSpec& u) { return u.k; },
          [](const PartitionSpec& p) {
            int rank = 0;
            for (int c : p.capacities) rank += c;
            return rank;
          },
          [](const GraphicSpec& g) {
            return GraphicRank(g.num_vertices, g.edges);
          },
      },
      instance.matroid);
}

bool IsIntegerValued(const Instance& instance) {
  return std::visit(
      Overloaded{
          [](const ModularSpec& m) { return AllIntegers(m.weights); },
          [](const CoverageSpec& c) {
            return AllIntegers(c.universe_weights);
          },
          [](const ConcaveOfModularSpec& c) {
            return c.exponent == 1.0 && AllIntegers(c.weights);
          },
      },
      instance.function);
}

Oracles Build(const Instance& instance) {
  Validate(instance);
  const ElementId n = instance.n;
  std::shared_ptr<const IndependenceOracle> matroid = std::visit(
      Overloaded{
          [&](const UniformSpec& u)
              -> std::shared_ptr<const IndependenceOracle> {
            return std::make_shared<UniformMatroid>(n, u.k);
          },
          [&](const PartitionSpec& p)
              -> std::shared_ptr<const IndependenceOracle> {
            return std::make_shared<PartitionMatroid>(n, p.parts,
                                                      p.capacities);
          },
          [&](const GraphicSpec& g)
              -> std::shared_ptr<const IndependenceOracle> {
            return std::make_shared<GraphicMatroid>(g.num_vertices, g.edges);
          },
      },
      instance.matroid);
  std::shared_ptr<const ValueOracle> function = std::visit(
      Overloaded{
          [](const ModularSpec& m) -> std::shared_ptr<const ValueOracle> {
            return std::make_shared<ModularFunction>(m.weights);
          },
          [](const CoverageSpec& c) -> std::shared_ptr<const ValueOracle> {
            return std::make_shared<CoverageFunction>(c.universe_weights,
                                                      c.covers);
          },
          [](const ConcaveOfModularSpec& c)
              -> std::shared_ptr<const ValueOracle> {
            return std::make_shared<ConcaveOfModularFunction>(c.weights,
                                                              c.exponent);
          },
      },
      instance.function);
  auto counts = std::make_shared<OracleCounts>();
  return Oracles{SetFunction(std::move(function), counts),
                 Matroid(std::move(matroid), counts), counts};
}

}  // namespace submod
