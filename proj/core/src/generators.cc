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

#include "submod/generators.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "submod/random.h"

namespace submod {
namespace {

constexpr double kWeightCatalog[] = {3, 1, 4, 1, 5, 9, 2, 6, 5, 3};

struct NamedMatroid {
  std::string tag;
  MatroidSpec spec;
  int rank;
};

struct NamedFunction {
  std::string tag;
  FunctionSpec spec;
};

std::vector<std::pair<int, int>> CycleThrough(
    const std::vector<std::pair<int, int>>& pattern, int count) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < count; ++i) edges.push_back(pattern[i % pattern.size()]);
  return edges;
}

std::vector<NamedMatroid> CatalogMatroids(int n) {
  std::vector<NamedMatroid> out;
  for (int k = 2; k <= n; ++k) {
    out.push_back({"uniform-k" + std::to_string(k), UniformSpec{k}, k});
  }
  {
    PartitionSpec alt;
    alt.parts.resize(2);
    for (int i = 0; i < n; ++i) alt.parts[i % 2].push_back(i);
    alt.capacities = {1, 1};
    out.push_back({"partition-alt2", alt, 2});
  }
  if (n >= 3) {
    PartitionSpec blocks;
    blocks.parts.resize(2);
    const int half = (n + 1) / 2;
    for (int i = 0; i < n; ++i) blocks.parts[i < half ? 0 : 1].push_back(i);
    blocks.capacities = {2, 1};
    out.push_back({"partition-blk21", blocks, 3});

    PartitionSpec alt3;
    alt3.parts.resize(3);
    for (int i = 0; i < n; ++i) alt3.parts[i % 3].push_back(i);
    alt3.capacities = {1, 1, 1};
    out.push_back({"partition-alt3", alt3, 3});

    // Element 0 sits in a capacity-0 part, i.e. it is a loop.
    PartitionSpec loops;
    loops.parts.resize(2);
    for (int i = 0; i < n; ++i) loops.parts[i == 0 ? 0 : 1].push_back(i);
    loops.capacities = {0, 2};
    out.push_back({"partition-loop", loops, 2});
  }
  out.push_back({"graphic-tri",
                 GraphicSpec{3, CycleThrough({{0, 1}, {1, 2}, {0, 2}}, n)},
                 2});
  if (n >= 3) {
    out.push_back(
        {"graphic-k4",
         GraphicSpec{4, CycleThrough({{0, 1}, {1, 2}, {2, 3}, {0, 2}, {1, 3},
                                      {0, 3}},
                                     n)},
         3});
  }
  out.push_back({"graphic-2comp",
                 GraphicSpec{4, CycleThrough({{0, 1}, {2, 3}}, n)}, 2});
  return out;
}

std::vector<int> Dedup(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<NamedFunction> CatalogFunctions(int n) {
  std::vector<NamedFunction> out;
  std::vector<double> weights(n);
  for (int i = 0; i < n; ++i) weights[i] = kWeightCatalog[i % 10];

  out.push_back({"mod", ModularSpec{weights}});
  out.push_back({"unit", ModularSpec{std::vector<double>(n, 1.0)}});
  {
    const int universe = std::max(2, n - 1);
    CoverageSpec cov;
    cov.universe_weights.assign(universe, 1.0);
    for (int i = 0; i < n; ++i) {
      cov.covers.push_back(Dedup({i % universe, (2 * i + 1) % universe}));
    }
    out.push_back({"cov", cov});
  }
  {
    CoverageSpec wcov;
    wcov.weighted = true;
    wcov.universe_weights = {2, 1, 3, 1, 2};
    for (int i = 0; i < n; ++i) {
      wcov.covers.push_back(Dedup({i % 5, (3 * i + 1) % 5}));
    }
    out.push_back({"wcov", wcov});
  }
  {
    // Nested covers: strongly diminishing returns.
    CoverageSpec nested;
    nested.weighted = true;
    nested.universe_weights = {1, 2, 4};
    for (int i = 0; i < n; ++i) {
      std::vector<int> items;
      for (int j = 0; j <= i % 3; ++j) items.push_back(j);
      nested.covers.push_back(items);
    }
    out.push_back({"nested", nested});
  }
  out.push_back({"sqrt", ConcaveOfModularSpec{weights, 0.5}});
  return out;
}

}  // namespace

std::vector<Instance> EnumerateSmallInstances(int max_n, int max_k) {
  if (max_n > 10 || max_k > 4) {
    throw std::invalid_argument(
        "EnumerateSmallInstances: requires max_n <= 10 and max_k <= 4");
  }
  std::vector<Instance> out;
  for (int n = 2; n <= max_n; ++n) {
    const auto functions = CatalogFunctions(n);
    for (const auto& m : CatalogMatroids(n)) {
      if (m.rank < 2 || m.rank > max_k) continue;
      for (const auto& f : functions) {
        Instance instance;
        instance.n = n;
        instance.matroid = m.spec;
        instance.function = f.spec;
        instance.label = "n" + std::to_string(n) + "-" + m.tag + "-" + f.tag;
        out.push_back(std::move(instance));
      }
    }
  }
  return out;
}

MatroidKind ParseMatroidKind(const std::string& name) {
  if (name == "uniform") return MatroidKind::kUniform;
  if (name == "partition") return MatroidKind::kPartition;
  if (name == "graphic") return MatroidKind::kGraphic;
  throw std::invalid_argument("unknown matroid kind \"" + name + "\"");
}

FunctionKind ParseFunctionKind(const std::string& name) {
  if (name == "modular") return FunctionKind::kModular;
  if (name == "coverage") return FunctionKind::kCoverage;
  if (name == "weighted_coverage") return FunctionKind::kWeightedCoverage;
  if (name == "concave_of_modular") return FunctionKind::kConcaveOfModular;
  throw std::invalid_argument("unknown function kind \"" + name + "\"");
}

Instance RandomInstance(std::uint64_t seed, ElementId n,
                        const RandomInstanceOptions& options) {
  if (n < 2) throw std::invalid_argument("RandomInstance: need n >= 2");
  if (options.rank < 1) {
    throw std::invalid_argument("RandomInstance: need rank >= 1");
  }
  if (options.universe_size < 0) {
    throw std::invalid_argument("RandomInstance: negative universe size");
  }
  Rng rng(seed);
  const int k = std::min<int>(options.rank, n);

  Instance instance;
  instance.n = n;
  instance.label = "random-s" + std::to_string(seed) + "-n" +
                   std::to_string(n) + "-k" + std::to_string(k);

  switch (options.matroid) {
    case MatroidKind::kUniform:
      instance.matroid = UniformSpec{k};
      break;
    case MatroidKind::kPartition: {
      std::vector<ElementId> order(n);
      for (ElementId i = 0; i < n; ++i) order[i] = i;
      rng.Shuffle(order);
      PartitionSpec spec;
      spec.parts.resize(k);
      for (ElementId i = 0; i < n; ++i) {
        int part = i < k ? i : static_cast<int>(rng.Below(k));
        spec.parts[part].push_back(order[i]);
      }
      for (auto& part : spec.parts) std::sort(part.begin(), part.end());
      spec.capacities.assign(k, 1);
      instance.matroid = std::move(spec);
      break;
    }
    case MatroidKind::kGraphic: {
      const int vertices = k + 1;
      std::vector<int> relabel(vertices);
      for (int v = 0; v < vertices; ++v) relabel[v] = v;
      rng.Shuffle(relabel);
      GraphicSpec spec;
      spec.num_vertices = vertices;
      for (int v = 1; v < vertices; ++v) {
        int parent = static_cast<int>(rng.Below(v));
        spec.edges.emplace_back(relabel[parent], relabel[v]);
      }
      while (static_cast<ElementId>(spec.edges.size()) < n) {
        int a = static_cast<int>(rng.Below(vertices));
        int b = static_cast<int>(rng.Below(vertices - 1));
        if (b >= a) ++b;
        spec.edges.emplace_back(a, b);
      }
      rng.Shuffle(spec.edges);
      instance.matroid = std::move(spec);
      break;
    }
  }

  auto random_weights = [&](int count) {
    std::vector<double> w(count);
    for (auto& x : w) x = rng.Between(1, 10);
    return w;
  };

  switch (options.function) {
    case FunctionKind::kModular:
      instance.function = ModularSpec{random_weights(n)};
      break;
    case FunctionKind::kConcaveOfModular:
      instance.function =
          ConcaveOfModularSpec{random_weights(n),
                               ConcaveOfModularSpec::kDefaultExponent};
      break;
    case FunctionKind::kCoverage:
    case FunctionKind::kWeightedCoverage: {
      const int universe =
          options.universe_size > 0 ? options.universe_size : n;
      CoverageSpec spec;
      spec.weighted = options.function == FunctionKind::kWeightedCoverage;
      for (ElementId u = 0; u < n; ++u) {
        const int count = std::min(universe, rng.Between(1, 3));
        std::vector<int> items;
        while (static_cast<int>(items.size()) < count) {
          int item = static_cast<int>(rng.Below(universe));
          if (std::find(items.begin(), items.end(), item) == items.end()) {
            items.push_back(item);
          }
        }
        std::sort(items.begin(), items.end());
        spec.covers.push_back(std::move(items));
      }
      spec.universe_weights = spec.weighted
                                  ? random_weights(universe)
                                  : std::vector<double>(universe, 1.0);
      instance.function = std::move(spec);
      break;
    }
  }
  Validate(instance);
  return instance;
}

}  // namespace submod
