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

#include "submod/matching.h"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "submod/errors.h"

namespace submod {

WeightedBipartiteGraph::WeightedBipartiteGraph(int size)
    : size_(size), cells_(static_cast<std::size_t>(size) * size) {
  if (size < 0) throw std::invalid_argument("WeightedBipartiteGraph: size < 0");
}

void WeightedBipartiteGraph::AddEdge(int left, int right, double weight,
                                     ElementId payload) {
  if (left < 0 || left >= size_ || right < 0 || right >= size_) {
    throw std::invalid_argument("WeightedBipartiteGraph::AddEdge: vertex (" +
                                std::to_string(left) + ", " +
                                std::to_string(right) + ") out of range");
  }
  if (!std::isfinite(weight)) {
    throw std::invalid_argument(
        "WeightedBipartiteGraph::AddEdge: non-finite weight");
  }
  auto& cell = cells_[static_cast<std::size_t>(left) * size_ + right];
  if (!cell) {
    cell = BipartiteEdge{left, right, weight, payload};
    ++edge_count_;
  } else if (weight > cell->weight ||
             (weight == cell->weight && payload < cell->payload)) {
    cell->weight = weight;
    cell->payload = payload;
  }
}

Matching MaxWeightPerfectMatching(const WeightedBipartiteGraph& graph) {
  const int n = graph.left_size();
  Matching result;
  if (n == 0) return result;

  double max_abs = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (const auto& e = graph.edge(i, j)) {
        max_abs = std::max(max_abs, std::fabs(e->weight));
      }
    }
  }
  // Any assignment using a missing edge costs more than every assignment
  // that avoids them.
  const double penalty = max_abs > 0 ? 4.0 * n * max_abs : 1.0;

  // Minimize cost = -weight, 1-based rows and columns; column 0 is the
  // virtual root of each augmenting search.
  auto cost = [&](int i, int j) {
    const auto& e = graph.edge(i - 1, j - 1);
    return e ? -e->weight : penalty;
  };
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0), v(n + 1, 0), minv(n + 1);
  std::vector<int> row_of(n + 1, 0), way(n + 1, 0);
  std::vector<char> used(n + 1);
  for (int i = 1; i <= n; ++i) {
    double best = inf;
    for (int j = 1; j <= n; ++j) best = std::min(best, cost(i, j));
    u[i] = best;
  }

  for (int i = 1; i <= n; ++i) {
    row_of[0] = i;
    int j0 = 0;
    std::fill(minv.begin(), minv.end(), inf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const int i0 = row_of[j0];
      double delta = inf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double reduced = cost(i0, j) - u[i0] - v[j];
        if (reduced < minv[j]) {
          minv[j] = reduced;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[row_of[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (row_of[j0] != 0);
    do {
      const int j1 = way[j0];
      row_of[j0] = row_of[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  result.pairs.resize(n);
  for (int j = 1; j <= n; ++j) {
    const auto& e = graph.edge(row_of[j] - 1, j - 1);
    if (!e) {
      throw InfeasibleMatching("bipartite graph has no perfect matching");
    }
    result.pairs[j - 1] = *e;
    result.total_weight += e->weight;
  }
  return result;
}

}  // namespace submod
