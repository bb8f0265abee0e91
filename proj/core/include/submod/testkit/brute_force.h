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

#ifndef SUBMOD_TESTKIT_BRUTE_FORCE_H_
#define SUBMOD_TESTKIT_BRUTE_FORCE_H_

#include <cstdint>
#include <vector>

#include "submod/oracle.h"

namespace submod::testkit {

inline constexpr std::int64_t kDefaultMaxBases = 1'000'000;

// Every base of m, in lexicographic order, found by backtracking over the
// independence oracle. Throws BudgetExceeded once more than `max_bases`
// bases exist.
std::vector<ElementSet> EnumerateBases(const Matroid& m,
                                       std::int64_t max_bases = kDefaultMaxBases);

struct OptResult {
  double value = 0;
  // Lexicographically first base attaining `value`.
  ElementSet witness;
};

// Exact maximum of f over the bases of m.
OptResult BruteForceOpt(const SetFunction& f, const Matroid& m,
                        std::int64_t max_bases = kDefaultMaxBases);
OptResult BruteForceOpt(const SetFunction& f,
                        const std::vector<ElementSet>& bases);

}  // namespace submod::testkit

#endif  // SUBMOD_TESTKIT_BRUTE_FORCE_H_
