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

// Acceptance suite: prints one [PASS] or [FAIL] line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cli/complexity.h"
#include "submod/algorithms.h"
#include "submod/errors.h"
#include "submod/generators.h"
#include "submod/matching.h"
#include "submod/parameters.h"
#include "submod/random.h"
#include "submod/solve.h"
#include "submod/testkit/brute_force.h"
#include "submod/testkit/exchange.h"
#include "submod/testkit/expectation.h"
#include "submod/testkit/property_checks.h"

namespace submod {
namespace {

using testkit::CheckResult;
using testkit::PreparedInstance;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Tally {
  int ran = 0;
  int skipped = 0;
  int violations = 0;
  std::string first;

  void Add(const CheckResult& r) {
    if (!r.ran) {
      ++skipped;
      return;
    }
    ++ran;
    violations += static_cast<int>(r.violations.size());
    if (first.empty() && !r.violations.empty()) {
      first = r.violations.front().instance + ": " +
              r.violations.front().detail;
    }
  }
  std::string Summary() const {
    std::ostringstream os;
    os << ran << " instances checked";
    if (skipped) os << ", " << skipped << " over the size limit";
    os << ", " << violations << " violations";
    if (!first.empty()) os << " (first: " << first << ")";
    return os.str();
  }
};

const std::vector<PreparedInstance>& Suite() {
  static const std::vector<PreparedInstance> suite = [] {
    std::vector<PreparedInstance> out;
    for (const Instance& instance : EnumerateSmallInstances(8, 3)) {
      out.push_back(testkit::Prepare(instance));
    }
    return out;
  }();
  return suite;
}

Outcome ClosedForm() {
  const Parameters p = ComputeParameters(0.9);
  std::ostringstream os;
  os.precision(6);
  os << std::fixed << "x=0.9: bound=" << p.bound << ", beta=" << p.beta
     << ", p=" << p.p;
  const bool pass = std::abs(p.bound - 0.500870) <= 1e-4 && p.bound > 0.5008 &&
                    p.beta >= 0.2 && p.beta <= 0.8 &&
                    std::abs(p.beta - 0.3548) <= 1e-4;
  return {pass, os.str()};
}

Outcome SuiteCheck(const std::function<CheckResult(const PreparedInstance&)>&
                       check,
                   bool must_run_all) {
  Tally tally;
  for (const auto& p : Suite()) tally.Add(check(p));
  const bool pass = tally.violations == 0 && tally.ran > 0 &&
                    (!must_run_all || tally.skipped == 0);
  return {pass, tally.Summary()};
}

Outcome DeterministicRatio() {
  Outcome out = SuiteCheck(testkit::CheckDeterministicRatio, true);
  double worst = 1;
  for (const auto& p : Suite()) {
    const Oracles o = Build(p.instance);
    const double value = SplitAndGrowDeterministic(o.f, o.m).value;
    if (p.opt.value > 0) worst = std::min(worst, value / p.opt.value);
  }
  std::ostringstream os;
  os << out.detail << ", min ratio " << worst;
  out.detail = os.str();
  return out;
}

Outcome ExpectationChecks() {
  Outcome exact = SuiteCheck(
      [](const PreparedInstance& p) {
        return testkit::CheckRandomGreedyExpectation(p, 200);
      },
      false);

  std::vector<const PreparedInstance*> eligible;
  for (const auto& p : Suite()) {
    const Oracles o = Build(p.instance);
    try {
      const auto e = testkit::RRGreedyExactExpectation(o.f, o.m, 200);
      // Only instances whose outcome is actually random.
      for (const auto& leaf : e.tree.leaves) {
        if (leaf.value != e.tree.leaves.front().value) {
          eligible.push_back(&p);
          break;
        }
      }
    } catch (const BudgetExceeded&) {
    }
  }
  constexpr int kSelected = 10;
  constexpr int kRuns = 10'000;
  int agreeing = 0, selected = 0;
  double worst_z = 0;
  for (int s = 0; s < kSelected && !eligible.empty(); ++s) {
    const PreparedInstance& p = *eligible[s * eligible.size() / kSelected];
    ++selected;
    const Oracles o = Build(p.instance);
    const double expected =
        testkit::RRGreedyExactExpectation(o.f, o.m, 200).expected_value;
    double sum = 0, sum_sq = 0;
    for (std::uint64_t seed = 0; seed < kRuns; ++seed) {
      const double v = o.f(ResidualRandomGreedy(o.f, o.m, seed));
      sum += v;
      sum_sq += v * v;
    }
    const double mean = sum / kRuns;
    const double se =
        std::sqrt(std::max(0.0, sum_sq / kRuns - mean * mean) / kRuns);
    const double gap = std::abs(mean - expected);
    if (se > 0 && gap <= 5 * se) ++agreeing;
    if (se > 0) worst_z = std::max(worst_z, gap / se);
  }
  std::ostringstream os;
  os << exact.detail << "; Monte Carlo within 5 SE on " << agreeing << "/"
     << selected << " instances (max |z| " << worst_z << ")";
  return {exact.pass && selected == kSelected && agreeing == kSelected,
          os.str()};
}

std::optional<double> PermutationOptimum(const WeightedBipartiteGraph& g) {
  const int n = g.left_size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<double> best;
  do {
    double total = 0;
    bool ok = true;
    for (int j = 0; j < n && ok; ++j) {
      const auto& e = g.edge(perm[j], j);
      if (!e) {
        ok = false;
      } else {
        total += e->weight;
      }
    }
    if (ok && (!best || total > *best)) best = total;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Outcome MatchingEquivalence() {
  int graphs = 0, agree = 0, infeasible = 0;
  std::string first;
  for (int trial = 0; trial < 200; ++trial) {
    const bool sparse = trial % 2 == 1;
    Rng rng(9000 + trial);
    const int n = 1 + static_cast<int>(rng.Below(7));
    WeightedBipartiteGraph g(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (sparse && rng.Below(2) == 0) continue;
        g.AddEdge(i, j, rng.Between(-5, 20), i * n + j);
      }
    }
    ++graphs;
    const std::optional<double> expected = PermutationOptimum(g);
    bool ok = false;
    try {
      const Matching m = MaxWeightPerfectMatching(g);
      ok = expected && m.total_weight == *expected;
    } catch (const InfeasibleMatching&) {
      ok = !expected;
      ++infeasible;
    }
    if (ok) {
      ++agree;
    } else if (first.empty()) {
      first = "trial " + std::to_string(trial);
    }
  }
  std::ostringstream os;
  os << agree << "/" << graphs << " graphs agree (" << infeasible
     << " infeasible)";
  if (!first.empty()) os << ", first mismatch " << first;
  return {agree == graphs, os.str()};
}

Outcome ExchangePairs() {
  Rng rng(31337);
  int pairs = 0, verified = 0;
  std::string first;
  for (int trial = 0; trial < 100; ++trial) {
    RandomInstanceOptions options;
    options.matroid =
        trial % 2 == 0 ? MatroidKind::kGraphic : MatroidKind::kPartition;
    const ElementId n = 4 + static_cast<ElementId>(rng.Below(7));
    options.rank = 2 + static_cast<int>(rng.Below(std::min<ElementId>(n - 1, 5)));
    const Instance instance = RandomInstance(5000 + trial, n, options);
    const Oracles o = Build(instance);
    std::vector<double> w(n);
    for (auto& x : w) {
      x = trial % 4 < 2 ? rng.Between(0, 4) : rng.Below(1000) / 7.0;
    }
    const ElementSet a = MaxWeightBase(o.m, w);
    const auto bases = testkit::EnumerateBases(o.m);
    const ElementSet b = bases[rng.Below(bases.size())];
    ++pairs;
    try {
      const auto witness = testkit::ExchangeBijection(a, b, w, o.m);
      const auto problems = testkit::VerifyBijection(witness, a, b, w, o.m);
      if (problems.empty()) {
        ++verified;
      } else if (first.empty()) {
        first = instance.label + ": " + problems.front();
      }
    } catch (const std::exception& e) {
      if (first.empty()) first = instance.label + ": " + e.what();
    }
  }
  std::ostringstream os;
  os << verified << "/" << pairs << " pairs verified";
  if (!first.empty()) os << ", first failure " << first;
  return {verified == pairs, os.str()};
}

Outcome ComplexityScaling() {
  const cli::ComplexityReport report = cli::MeasureComplexity({});
  std::ostringstream os;
  os << "value_queries / (n k^2) per cell:";
  for (const auto& c : report.cells) {
    os << " (" << c.n << "," << c.k << ")=" << c.mean_value_constant;
  }
  double lo = 0, hi = 0;
  for (const auto& row : report.rows) {
    if (lo == 0 || row.value_constant < lo) lo = row.value_constant;
    hi = std::max(hi, row.value_constant);
  }
  os << "; spread of cell means " << report.constant_spread
     << " (single runs: " << hi / lo << ")";
  return {report.cells.size() == 6 && report.constant_spread < 2, os.str()};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

int Main() {
  const std::vector<Criterion> criteria = {
      {1, "closed-form parameters", ClosedForm},
      {2, "msg-det ratio >= 0.5008 on the small catalog", DeterministicRatio},
      {3, "split balance over the beta grid",
       [] {
         return SuiteCheck(
             [](const PreparedInstance& p) {
               return testkit::CheckSplitBalance(p);
             },
             true);
       }},
      {4, "split sides disjoint with base union",
       [] {
         static constexpr double kP[] = {0, 0.25, 0.5, 0.75, 1};
         return SuiteCheck(
             [](const PreparedInstance& p) {
               return testkit::CheckSplitStructure(p, kP);
             },
             true);
       }},
      {5, "residual random greedy exact expectation", ExpectationChecks},
      {6, "residual parallel greedy from every base",
       [] {
         return SuiteCheck(
             [](const PreparedInstance& p) {
               return testkit::CheckParallelGreedy(p, 20);
             },
             false);
       }},
      {7, "Hungarian matching vs permutation brute force",
       MatchingEquivalence},
      {8, "exchange bijection witnesses", ExchangePairs},
      {9, "split partition witness for every optimal base",
       [] {
         return SuiteCheck(
             [](const PreparedInstance& p) {
               return testkit::CheckSplitPartition(p);
             },
             true);
       }},
      {10, "msg-det query count scales as n k^2", ComplexityScaling},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failures;
    std::printf("[%s] %d. %s: %s\n", outcome.pass ? "PASS" : "FAIL", c.id,
                c.name, outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace submod

int main() { return submod::Main(); }
