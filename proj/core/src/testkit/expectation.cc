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

#include "submod/testkit/expectation.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "submod/errors.h"
#include "submod/testkit/brute_force.h"

namespace submod::testkit {
namespace {

using Key = std::vector<std::pair<double, ElementId>>;

Key SortedKey(const ElementSet& s, std::span<const double> weights) {
  Key key;
  for (ElementId u : s) key.emplace_back(-weights[u], u);
  std::sort(key.begin(), key.end());
  return key;
}

class Enumerator {
 public:
  Enumerator(const SetFunction& f, const Matroid& m, std::int64_t max_leaves)
      : f_(f), k_(m.rank()), bases_(EnumerateBases(m)),
        max_leaves_(max_leaves) {
    result_.expected_by_step.assign(k_ + 1, 0.0);
  }

  ExactExpectation Run() {
    Visit(ElementSet(), 1.0);
    double total = 0;
    double expected = 0;
    for (const auto& leaf : result_.tree.leaves) {
      total += leaf.probability;
      expected += leaf.probability * leaf.value;
    }
    if (std::abs(total - 1.0) > 1e-12) {
      throw InternalInvariantError(
          "RRGreedyExactExpectation: leaf probabilities sum to " +
          std::to_string(total));
    }
    result_.expected_value = expected;
    return std::move(result_);
  }

 private:
  // Returns the index of the node or leaf created for `prefix`.
  int Visit(const ElementSet& prefix, double probability) {
    const int step = static_cast<int>(prefix.size());
    const double value = f_(prefix);
    result_.expected_by_step[step] += probability * value;
    if (step == k_) {
      if (static_cast<std::int64_t>(result_.tree.leaves.size()) >=
          max_leaves_) {
        throw BudgetExceeded("RRGreedyExactExpectation: more than " +
                             std::to_string(max_leaves_) + " leaves");
      }
      result_.tree.leaves.push_back({prefix, value, probability});
      return static_cast<int>(result_.tree.leaves.size()) - 1;
    }

    std::vector<double> weights(f_.n(), 0.0);
    for (ElementId u = 0; u < f_.n(); ++u) {
      if (!prefix.Contains(u)) weights[u] = f_(prefix.With(u)) - value;
    }
    const ElementSet candidates =
        ReferenceMaxWeightBase(bases_, prefix, weights);
    const int index = static_cast<int>(result_.tree.nodes.size());
    result_.tree.nodes.push_back({step + 1, prefix, value, probability,
                                  candidates, 1.0 / candidates.size(), {}});
    const double branch = probability / candidates.size();
    for (ElementId u : candidates) {
      const int child = Visit(prefix.With(u), branch);
      result_.tree.nodes[index].children.push_back(child);
    }
    return index;
  }

  const SetFunction& f_;
  int k_;
  std::vector<ElementSet> bases_;
  std::int64_t max_leaves_;
  ExactExpectation result_;
};

}  // namespace

ElementSet ReferenceMaxWeightBase(const std::vector<ElementSet>& bases_of_m,
                                  const ElementSet& a,
                                  std::span<const double> weights) {
  bool found = false;
  ElementSet best;
  Key best_key;
  for (const ElementSet& base : bases_of_m) {
    if (!a.IsSubsetOf(base)) continue;
    ElementSet rest = base.Difference(a);
    Key key = SortedKey(rest, weights);
    if (!found || key < best_key) {
      found = true;
      best = std::move(rest);
      best_key = std::move(key);
    }
  }
  if (!found) {
    throw InternalInvariantError("ReferenceMaxWeightBase: no base contains " +
                                 a.ToString());
  }
  return best;
}

ExactExpectation RRGreedyExactExpectation(const SetFunction& f,
                                          const Matroid& m,
                                          std::int64_t max_leaves) {
  return Enumerator(f, m, max_leaves).Run();
}

}  // namespace submod::testkit
