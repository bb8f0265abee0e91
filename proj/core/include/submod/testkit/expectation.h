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

#ifndef SUBMOD_TESTKIT_EXPECTATION_H_
#define SUBMOD_TESTKIT_EXPECTATION_H_

#include <cstdint>
#include <span>
#include <vector>

#include "submod/oracle.h"

namespace submod::testkit {

inline constexpr std::int64_t kDefaultMaxLeaves = 100'000;

// A decision point of residual random greedy: the prefix A_{i-1}, the
// candidate base M_i and the children reached by each uniform choice.
struct ExpectationNode {
  int step = 0;  // i, 1-based
  ElementSet prefix;
  double prefix_value = 0;
  double probability = 0;  // of reaching this node
  ElementSet candidates;
  double branch_probability = 0;  // 1 / |M_i|
  // Indices into ExpectationTree::nodes, or into ::leaves on the last step.
  std::vector<int> children;
};

struct ExpectationLeaf {
  ElementSet set;
  double value = 0;
  double probability = 0;
};

struct ExpectationTree {
  std::vector<ExpectationNode> nodes;  // nodes[0] is the root
  std::vector<ExpectationLeaf> leaves;
};

struct ExactExpectation {
  double expected_value = 0;
  // expected_by_step[i] = E[f(A_i)] for i = 0..rank.
  std::vector<double> expected_by_step;
  ExpectationTree tree;
};

// Maximum-weight base of m / a, chosen among all bases of m containing `a`
// (taken from `bases_of_m`) as the one whose elements, sorted by descending
// weight and then ascending id, form the lexicographically smallest
// sequence. Does not use the library's greedy.
ElementSet ReferenceMaxWeightBase(const std::vector<ElementSet>& bases_of_m,
                                  const ElementSet& a,
                                  std::span<const double> weights);

// Enumerates every run of residual random greedy on (f, m) with its
// probability and returns the exact expectations. Throws BudgetExceeded
// beyond `max_leaves` leaves and InternalInvariantError if the leaf
// probabilities do not sum to 1 within 1e-12.
ExactExpectation RRGreedyExactExpectation(
    const SetFunction& f, const Matroid& m,
    std::int64_t max_leaves = kDefaultMaxLeaves);

}  // namespace submod::testkit

#endif  // SUBMOD_TESTKIT_EXPECTATION_H_
