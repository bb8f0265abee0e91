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

#ifndef SUBMOD_MATCHING_H_
#define SUBMOD_MATCHING_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "submod/element_set.h"

namespace submod {

struct BipartiteEdge {
  int left = 0;
  int right = 0;
  double weight = 0;
  // Element that generated the edge.
  ElementId payload = -1;

  friend bool operator==(const BipartiteEdge&, const BipartiteEdge&) = default;
};

// Square bipartite graph with at most one stored edge per (left, right)
// pair. Adding a parallel edge keeps the heavier one; equal weights keep the
// smaller payload.
class WeightedBipartiteGraph {
 public:
  explicit WeightedBipartiteGraph(int size);

  int left_size() const { return size_; }
  int right_size() const { return size_; }

  // Throws std::invalid_argument for out-of-range vertices or a non-finite
  // weight.
  void AddEdge(int left, int right, double weight, ElementId payload);

  const std::optional<BipartiteEdge>& edge(int left, int right) const {
    return cells_[static_cast<std::size_t>(left) * size_ + right];
  }
  std::size_t edge_count() const { return edge_count_; }

 private:
  int size_;
  std::size_t edge_count_ = 0;
  std::vector<std::optional<BipartiteEdge>> cells_;
};

struct Matching {
  // pairs[j] is the edge matched to right vertex j.
  std::vector<BipartiteEdge> pairs;
  double total_weight = 0;
};

// Maximum-weight perfect matching by the Hungarian method in O(size^3).
// Rows are the left vertices, processed in ascending order; potentials start
// at the row maxima and every scan visits right vertices in ascending order,
// with ties resolved towards the lower index, so the result is a function of
// the graph alone. Missing edges carry a penalty larger than any perfect
// matching's weight; if the optimum still uses one, no perfect matching
// exists and InfeasibleMatching is thrown.
Matching MaxWeightPerfectMatching(const WeightedBipartiteGraph& graph);

}  // namespace submod

#endif  // SUBMOD_MATCHING_H_
