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

#include "submod/testkit/split_partition.h"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "submod/errors.h"

namespace submod::testkit {
namespace {

bool Feasible(const ElementSet& side, const ElementSet& part, double f_t,
              const SetFunction& f, const Matroid& m, double tolerance) {
  if (!side.IsDisjointFrom(part)) return false;
  const ElementSet joined = side.Union(part);
  if (!m.IsBase(joined)) return false;
  return f(side) + f(joined) >= f_t - tolerance;
}

}  // namespace

SplitPartition SplitPartitionWitness(const ElementSet& a, const ElementSet& b,
                                     const ElementSet& t, const SetFunction& f,
                                     const Matroid& m, double tolerance) {
  if (!a.IsDisjointFrom(b) || !m.IsBase(a.Union(b)) || !m.IsBase(t)) {
    throw std::invalid_argument(
        "SplitPartitionWitness: need disjoint A, B with A u B a base, and a "
        "base T");
  }
  if (t.size() > 20) {
    throw std::invalid_argument("SplitPartitionWitness: |T| > 20");
  }
  const double f_t = f(t);
  const std::size_t size = t.size();
  for (std::size_t count = 0; count <= size; ++count) {
    // selector[i] marks t[i] as part of T_A; prev_permutation over a sorted
    // 1...10...0 pattern visits the subsets of each size lexicographically.
    std::vector<char> selector(size, 0);
    std::fill(selector.begin(), selector.begin() + count, 1);
    do {
      std::vector<ElementId> in_a, in_b;
      for (std::size_t i = 0; i < size; ++i) {
        (selector[i] ? in_a : in_b).push_back(t[i]);
      }
      SplitPartition candidate{ElementSet::FromUnsorted(in_a),
                               ElementSet::FromUnsorted(in_b)};
      if (Feasible(a, candidate.t_a, f_t, f, m, tolerance) &&
          Feasible(b, candidate.t_b, f_t, f, m, tolerance)) {
        return candidate;
      }
    } while (std::prev_permutation(selector.begin(), selector.end()));
  }
  throw InternalInvariantError("SplitPartitionWitness: no partition of " +
                               t.ToString() + " for A = " + a.ToString() +
                               ", B = " + b.ToString());
}

}  // namespace submod::testkit
