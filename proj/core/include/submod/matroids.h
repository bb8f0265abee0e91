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

#ifndef SUBMOD_MATROIDS_H_
#define SUBMOD_MATROIDS_H_

#include <utility>
#include <vector>

#include "submod/oracle.h"

namespace submod {

// All constructors throw std::invalid_argument on inconsistent input and
// reject rank-0 matroids.

// U(n, k): every set of size at most k is independent.
class UniformMatroid : public LeafIndependenceOracle {
 public:
  UniformMatroid(ElementId n, int k);

  ElementId ground_size() const override { return n_; }
  const ElementSet& ground() const override { return ground_; }
  int rank() const override { return k_; }

 protected:
  bool Independent(const ElementSet& s) const override;

 private:
  ElementId n_;
  int k_;
  ElementSet ground_;
};

// Disjoint parts covering [0, n); at most capacities[i] elements of part i.
class PartitionMatroid : public LeafIndependenceOracle {
 public:
  PartitionMatroid(ElementId n, std::vector<std::vector<ElementId>> parts,
                   std::vector<int> capacities);

  ElementId ground_size() const override { return n_; }
  const ElementSet& ground() const override { return ground_; }
  int rank() const override { return rank_; }

 protected:
  bool Independent(const ElementSet& s) const override;

 private:
  ElementId n_;
  std::vector<int> part_of_;
  std::vector<int> capacities_;
  int rank_ = 0;
  ElementSet ground_;
};

// Element i is the edge edges[i]; a set is independent iff it is a forest.
// Parallel edges and self-loops are allowed. Each query rebuilds a
// union-find over the vertices.
class GraphicMatroid : public LeafIndependenceOracle {
 public:
  GraphicMatroid(int num_vertices, std::vector<std::pair<int, int>> edges);

  ElementId ground_size() const override {
    return static_cast<ElementId>(edges_.size());
  }
  const ElementSet& ground() const override { return ground_; }
  int rank() const override { return rank_; }

 protected:
  bool Independent(const ElementSet& s) const override;

 private:
  int num_vertices_;
  std::vector<std::pair<int, int>> edges_;
  int rank_ = 0;
  ElementSet ground_;
};

// num_vertices minus the number of connected components of the edge set.
int GraphicRank(int num_vertices,
                const std::vector<std::pair<int, int>>& edges);

}  // namespace submod

#endif  // SUBMOD_MATROIDS_H_
