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

#ifndef SUBMOD_TESTKIT_EXCHANGE_H_
#define SUBMOD_TESTKIT_EXCHANGE_H_

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "submod/oracle.h"

namespace submod::testkit {

// Bijection h: A -> B stored as pairs (u, h(u)) in the order they were
// produced.
struct BijectionWitness {
  std::vector<std::pair<ElementId, ElementId>> mapping;
};

// For bases A and B of m with A of maximum weight under w (w >= 0), builds h
// with (B - h(u)) + u a base and w(u) >= w(h(u)) for every u in A. Each
// round maps a minimum-weight u_A of A (lowest id on ties) to u_A itself if
// it lies in B, and otherwise to the first u_B of B \ A in id order for
// which (A - u_A) + u_B and (B - u_B) + u_A are both bases; then it recurses
// on m / u_B with A - u_A and B - u_B.
//
// Throws std::invalid_argument when A or B is not a base, a weight is
// negative, or A is not of maximum weight (compared with MaxWeightBase up
// to 1e-9), and InternalInvariantError when no u_B exists.
BijectionWitness ExchangeBijection(const ElementSet& a, const ElementSet& b,
                                   std::span<const double> w,
                                   const Matroid& m);

// Re-checks a witness against m directly. Returns one message per failed
// property; empty means valid.
std::vector<std::string> VerifyBijection(const BijectionWitness& witness,
                                         const ElementSet& a,
                                         const ElementSet& b,
                                         std::span<const double> w,
                                         const Matroid& m);

}  // namespace submod::testkit

#endif  // SUBMOD_TESTKIT_EXCHANGE_H_
