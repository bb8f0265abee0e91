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

#ifndef SUBMOD_TESTKIT_SPLIT_PARTITION_H_
#define SUBMOD_TESTKIT_SPLIT_PARTITION_H_

#include "submod/oracle.h"

namespace submod::testkit {

struct SplitPartition {
  ElementSet t_a;
  ElementSet t_b;
};

// Searches the partitions T = T_A u T_B (by ascending |T_A|, then
// lexicographically) for one with A u T_A and B u T_B disjoint unions that
// are bases of m, f(A) + f(A u T_A) >= f(T) and f(B) + f(B u T_B) >= f(T),
// the inequalities holding up to `tolerance`.
//
// Requires A u B and T to be bases with A, B disjoint (std::invalid_argument
// otherwise) and |T| <= 20. Throws InternalInvariantError when no partition
// qualifies.
SplitPartition SplitPartitionWitness(const ElementSet& a, const ElementSet& b,
                                     const ElementSet& t, const SetFunction& f,
                                     const Matroid& m,
                                     double tolerance = 1e-9);

}  // namespace submod::testkit

#endif  // SUBMOD_TESTKIT_SPLIT_PARTITION_H_
