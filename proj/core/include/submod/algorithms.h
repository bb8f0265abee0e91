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

#ifndef SUBMOD_ALGORITHMS_H_
#define SUBMOD_ALGORITHMS_H_

#include <cstdint>
#include <span>
#include <vector>

#include "submod/oracle.h"

namespace submod {

// Building blocks for maximizing a monotone submodular f over the bases of a
// matroid. Every argmax breaks ties towards the smallest ElementId, so all
// deterministic routines are functions of their inputs.

struct SplitResult {
  ElementSet a;
  ElementSet b;

  friend bool operator==(const SplitResult&, const SplitResult&) = default;
};

// Fisher-Nemhauser-Wolsey greedy: repeatedly add the feasible element with
// the largest marginal.
ElementSet ClassicalGreedy(const SetFunction& f, const Matroid& m);

// Base of m maximizing the sum of weights[u]; weights is indexed by
// ElementId. Scans ground(m) by descending weight, then ascending id.
ElementSet MaxWeightBase(const Matroid& m, std::span<const double> weights);

// weights[u] = f(u | base) for every u in `candidates` and 0 elsewhere;
// size f.n(). Costs 1 + |candidates| value queries.
std::vector<double> MarginalWeights(const SetFunction& f,
                                    const ElementSet& base,
                                    const ElementSet& candidates);

// Builds A and B one element at a time. Each of the rank(m) steps looks at
// the elements that keep A u B independent, takes the best extension u_A of
// A and u_B of B, and adds u_A to A when
//   p * f(u_A | A) >= (1 - p) * f(u_B | B)
// and u_B to B otherwise. A and B are disjoint and A u B is a base.
// Throws std::invalid_argument for p outside [0, 1].
SplitResult Split(const SetFunction& f, const Matroid& m, double p);

// Randomized residual greedy: in step i, M_i is the max-weight base of
// m / A (weights f(u | A)) and a uniform element of M_i joins A. The draws
// come from Rng(seed). Returns a base of m; rank 0 gives the empty set.
ElementSet ResidualRandomGreedy(const SetFunction& f, const Matroid& m,
                                std::uint64_t seed);

// Deterministic counterpart that keeps rank(m) partial solutions A^j with
// residues B^j (initially `b`) and couples them each step through a
// maximum-weight perfect matching between the elements of b and the
// solution indices. Returns the best A^j (lowest j on ties).
//
// Throws std::invalid_argument if b is not a base of m, and
// InternalInvariantError if a step's graph has no perfect matching, which
// cannot happen for monotone submodular f.
ElementSet ResidualParallelGreedy(const SetFunction& f, const Matroid& m,
                                  const ElementSet& b);

}  // namespace submod

#endif  // SUBMOD_ALGORITHMS_H_
