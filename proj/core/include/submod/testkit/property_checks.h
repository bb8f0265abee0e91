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

#ifndef SUBMOD_TESTKIT_PROPERTY_CHECKS_H_
#define SUBMOD_TESTKIT_PROPERTY_CHECKS_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "submod/instance.h"
#include "submod/testkit/brute_force.h"

namespace submod::testkit {

// Absolute slack for inequalities between floating-point values.
inline constexpr double kTolerance = 1e-9;
// Approximation ratio guaranteed for split-and-grow.
inline constexpr double kGuaranteedRatio = 0.5008;

inline constexpr double kSplitProbabilityGrid[] = {0,   0.25, 0.425822,
                                                   0.5, 0.75, 1};
inline constexpr double kBetaGrid[] = {0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8};
inline constexpr double kXGrid[] = {0, 0.25, 0.5, 0.75, 0.9, 1};

// An instance together with its bases and exact optimum.
struct PreparedInstance {
  Instance instance;
  int rank = 0;
  bool integer_valued = false;
  std::vector<ElementSet> bases;
  OptResult opt;
};

// Throws BudgetExceeded when the matroid has more than `max_bases` bases.
PreparedInstance Prepare(const Instance& instance,
                         std::int64_t max_bases = kDefaultMaxBases);

struct Violation {
  std::string instance;
  std::string check;
  std::string detail;
};

struct CheckResult {
  std::string check;
  // False when the instance exceeded the check's size limit.
  bool ran = true;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

// c * f, sharing f's counter.
SetFunction Scaled(const SetFunction& f, double c);

// f is monotone submodular and the matroid satisfies its axioms.
CheckResult CheckOracleAxioms(const PreparedInstance& p);

// Split's two sides are disjoint and their union is a base, for each p.
CheckResult CheckSplitStructure(const PreparedInstance& p,
                                std::span<const double> probabilities =
                                    kSplitProbabilityGrid);

// With p derived from beta: beta f(A) + (1 - beta) f(B) >= w(beta) OPT.
CheckResult CheckSplitBalance(const PreparedInstance& p,
                              std::span<const double> betas = kBetaGrid);

// For every p and every optimal base T, SplitPartitionWitness finds a
// partition of T for the split output.
CheckResult CheckSplitPartition(const PreparedInstance& p,
                                std::span<const double> probabilities =
                                    kSplitProbabilityGrid);

// Exact expectation of residual random greedy on (f, M):
//   E[f(A_k)] >= OPT / 2,
//   E[f(A_i)] >= (g(i/k) + delta) OPT with delta = 1/(2k^2) for 0 < i < k,
// and, when M has at most `max_pair_bases` bases, for all bases T1, T2 and
// x in kXGrid:
//   3 E[f(A)] >= (1 + g(x)) f(T1) + (1 - x) f(T2 | T1).
// Skipped when the expectation tree has more than `max_leaves` leaves.
CheckResult CheckRandomGreedyExpectation(const PreparedInstance& p,
                                         std::int64_t max_leaves = 200,
                                         std::size_t max_pair_bases = 20);

// Residual parallel greedy started from every base B (instances with at most
// `max_bases` bases), with T the optimal witness:
//   f(A) >= OPT / 2 and 3 f(A) >= (1 + g(x)) OPT + (1 - x) f(B | T)
// for x in kXGrid. Skipped for instances with more bases.
CheckResult CheckParallelGreedy(const PreparedInstance& p,
                                std::size_t max_bases = 20);

// The deterministic split-and-grow at the default x returns a base worth at
// least kGuaranteedRatio * OPT, compared exactly on integer-valued instances
// and without slack otherwise.
CheckResult CheckDeterministicRatio(const PreparedInstance& p);

// The randomized split-and-grow averaged over seeds 0..seeds-1 reaches
// OPT / 2.
CheckResult CheckRandomizedMean(const PreparedInstance& p, int seeds = 100);

// Scaling f by 2 and 0.25 (and 3 on integer-valued instances) leaves the
// output of every algorithm unchanged.
CheckResult CheckScaleInvariance(const PreparedInstance& p);

// All of the above with their default grids.
std::vector<CheckResult> RunAllChecks(const PreparedInstance& p);

}  // namespace submod::testkit

#endif  // SUBMOD_TESTKIT_PROPERTY_CHECKS_H_
