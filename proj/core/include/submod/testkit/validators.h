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

#ifndef SUBMOD_TESTKIT_VALIDATORS_H_
#define SUBMOD_TESTKIT_VALIDATORS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "submod/oracle.h"

namespace submod::testkit {

struct ValidationReport {
  static constexpr std::size_t kMaxListed = 20;

  std::int64_t checks = 0;
  std::int64_t violation_count = 0;
  // The first kMaxListed violations.
  std::vector<std::string> violations;

  bool ok() const { return violation_count == 0; }
  void Fail(std::string message);
};

// Exhaustive over [0, n): f(S) >= 0, f(S) <= f(S + u), and
// f(u | S) >= f(u | T) for every S subset of T and u outside T, up to
// `tolerance`. Requires n <= 10.
ValidationReport ValidateMonotoneSubmodular(const SetFunction& f, ElementId n,
                                            double tolerance = 1e-9);

// Exhaustive over the subsets of ground(m), which must lie in [0, n):
// the empty set is independent, independence is closed under removal, the
// exchange property holds, and every maximal independent set has rank(m)
// elements. Requires n <= 10.
ValidationReport ValidateMatroidAxioms(const Matroid& m, ElementId n);

}  // namespace submod::testkit

#endif  // SUBMOD_TESTKIT_VALIDATORS_H_
