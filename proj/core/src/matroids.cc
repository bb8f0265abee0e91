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

#include "submod/matroids.h"

#include <stdexcept>
#include <string>

#include "submod/union_find.h"

namespace submod {

UniformMatroid::UniformMatroid(ElementId n, int k)
    : n_(n), k_(k), ground_(ElementSet::Range(n)) {
  if (k < 1 || k > n) {
    throw std::invalid_argument("UniformMatroid: need 1 <= k <= n, got k=" +
                                std::to_string(k) +
                                " n=" + std::to_string(n));
  }
}

bool UniformMatroid::Independent(const ElementSet& s) const {
  return static_cast<int>(s.size()) <= k_;
}

PartitionMatroid::PartitionMatroid(ElementId n,
                                   std::vector<std::vector<ElementId>> parts,
                                   std::vector<int> capacities)
    : n_(n),
      part_of_(n, -1),
      capacities_(std::move(capacities)),
      ground_(ElementSet::Range(n)) {
  if (parts.size() != capacities_.size()) {
    throw std::invalid_argument(
        "PartitionMatroid: parts and capacities differ in length");
  }
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (ElementId u : parts[p]) {
      if (u < 0 || u >= n) {
        throw std::invalid_argument("PartitionMatroid: element " +
                                    std::to_string(u) + " out of range");
      }
      if (part_of_[u] != -1) {
        throw std::invalid_argument("PartitionMatroid: element " +
                                    std::to_string(u) + " in two parts");
      }
      part_of_[u] = static_cast<int>(p);
    }
    int cap = capacities_[p];
    if (cap < 0 || cap > static_cast<int>(parts[p].size())) {
      throw std::invalid_argument("PartitionMatroid: capacity of part " +
                                  std::to_string(p) + " out of range");
    }
    rank_ += cap;
  }
  for (ElementId u = 0; u < n; ++u) {
    if (part_of_[u] == -1) {
      throw std::invalid_argument("PartitionMatroid: element " +
                                  std::to_string(u) + " is in no part");
    }
  }
  if (rank_ < 1) throw std::invalid_argument("PartitionMatroid: rank 0");
}

bool PartitionMatroid::Independent(const ElementSet& s) const {
  std::vector<int> used(capacities_.size(), 0);
  for (ElementId u : s) {
    int p = part_of_[u];
    if (++used[p] > capacities_[p]) return false;
  }
  return true;
}

int GraphicRank(int num_vertices,
                const std::vector<std::pair<int, int>>& edges) {
  UnionFind uf(num_vertices);
  int rank = 0;
  for (const auto& [a, b] : edges) rank += uf.Union(a, b) ? 1 : 0;
  return rank;
}

GraphicMatroid::GraphicMatroid(int num_vertices,
                               std::vector<std::pair<int, int>> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  if (num_vertices < 1) {
    throw std::invalid_argument("GraphicMatroid: need at least one vertex");
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& [a, b] = edges_[i];
    if (a < 0 || a >= num_vertices || b < 0 || b >= num_vertices) {
      throw std::invalid_argument("GraphicMatroid: edge " + std::to_string(i) +
                                  " has an endpoint out of range");
    }
  }
  ground_ = ElementSet::Range(static_cast<ElementId>(edges_.size()));
  rank_ = GraphicRank(num_vertices_, edges_);
  if (rank_ < 1) throw std::invalid_argument("GraphicMatroid: rank 0");
}

bool GraphicMatroid::Independent(const ElementSet& s) const {
  UnionFind uf(num_vertices_);
  for (ElementId e : s) {
    if (!uf.Union(edges_[e].first, edges_[e].second)) return false;
  }
  return true;
}

}  // namespace submod
