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

#include "submod/testkit/property_checks.h"

#include <cmath>
#include <iomanip>
#include <memory>
#include <sstream>

#include "submod/algorithms.h"
#include "submod/errors.h"
#include "submod/parameters.h"
#include "submod/solve.h"
#include "submod/testkit/expectation.h"
#include "submod/testkit/split_partition.h"
#include "submod/testkit/validators.h"

namespace submod::testkit {
namespace {

class ScaledOracle : public ValueOracle {
 public:
  ScaledOracle(std::shared_ptr<const ValueOracle> inner, double c)
      : inner_(std::move(inner)), c_(c) {}
  ElementId ground_size() const override { return inner_->ground_size(); }
  double Evaluate(const ElementSet& s, OracleCounts& counts) const override {
    return c_ * inner_->Evaluate(s, counts);
  }

 private:
  std::shared_ptr<const ValueOracle> inner_;
  double c_;
};

std::string Num(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

class Recorder {
 public:
  Recorder(const PreparedInstance& p, std::string check) {
    result_.check = std::move(check);
    label_ = p.instance.label;
  }

  void Fail(std::string detail) {
    result_.violations.push_back({label_, result_.check, std::move(detail)});
  }
  // lhs >= rhs, exactly when `exact` and with kTolerance slack otherwise.
  void ExpectAtLeast(double lhs, double rhs, bool exact,
                     const std::string& what) {
    if (lhs >= (exact ? rhs : rhs - kTolerance)) return;
    Fail(what + ": " + Num(lhs) + " < " + Num(rhs));
  }
  CheckResult Skip() {
    result_.ran = false;
    return std::move(result_);
  }
  CheckResult Done() { return std::move(result_); }

 private:
  std::string label_;
  CheckResult result_;
};

}  // namespace

SetFunction Scaled(const SetFunction& f, double c) {
  return SetFunction(std::make_shared<ScaledOracle>(f.oracle(), c),
                     f.shared_counts());
}

PreparedInstance Prepare(const Instance& instance, std::int64_t max_bases) {
  PreparedInstance p;
  p.instance = instance;
  p.rank = InstanceRank(instance);
  p.integer_valued = IsIntegerValued(instance);
  const Oracles oracles = Build(instance);
  p.bases = EnumerateBases(oracles.m, max_bases);
  p.opt = BruteForceOpt(oracles.f, p.bases);
  return p;
}

CheckResult CheckOracleAxioms(const PreparedInstance& p) {
  Recorder rec(p, "oracle-axioms");
  const Oracles o = Build(p.instance);
  for (const auto& v : ValidateMonotoneSubmodular(o.f, p.instance.n).violations) {
    rec.Fail(v);
  }
  for (const auto& v : ValidateMatroidAxioms(o.m, p.instance.n).violations) {
    rec.Fail(v);
  }
  return rec.Done();
}

CheckResult CheckSplitStructure(const PreparedInstance& p,
                                std::span<const double> probabilities) {
  Recorder rec(p, "split-structure");
  const Oracles o = Build(p.instance);
  for (double prob : probabilities) {
    const SplitResult s = Split(o.f, o.m, prob);
    if (!s.a.IsDisjointFrom(s.b)) {
      rec.Fail("p=" + Num(prob) + ": A and B intersect");
    }
    if (!o.m.IsBase(s.a.Union(s.b))) {
      rec.Fail("p=" + Num(prob) + ": A u B = " + s.a.Union(s.b).ToString() +
               " is not a base");
    }
  }
  return rec.Done();
}

CheckResult CheckSplitBalance(const PreparedInstance& p,
                              std::span<const double> betas) {
  Recorder rec(p, "split-balance");
  const Oracles o = Build(p.instance);
  for (double beta : betas) {
    const SplitResult s = Split(o.f, o.m, SplitProbability(beta));
    rec.ExpectAtLeast(beta * o.f(s.a) + (1 - beta) * o.f(s.b),
                      SplitGuarantee(beta) * p.opt.value, false,
                      "beta=" + Num(beta));
  }
  return rec.Done();
}

CheckResult CheckSplitPartition(const PreparedInstance& p,
                                std::span<const double> probabilities) {
  Recorder rec(p, "split-partition");
  const Oracles o = Build(p.instance);
  for (double prob : probabilities) {
    const SplitResult s = Split(o.f, o.m, prob);
    for (const ElementSet& t : p.bases) {
      if (o.f(t) != p.opt.value) continue;
      try {
        SplitPartitionWitness(s.a, s.b, t, o.f, o.m, kTolerance);
      } catch (const InternalInvariantError& e) {
        rec.Fail("p=" + Num(prob) + ", T=" + t.ToString() + ": " + e.what());
      }
    }
  }
  return rec.Done();
}

CheckResult CheckRandomGreedyExpectation(const PreparedInstance& p,
                                         std::int64_t max_leaves,
                                         std::size_t max_pair_bases) {
  Recorder rec(p, "rrgreedy-expectation");
  const Oracles o = Build(p.instance);
  ExactExpectation exact;
  try {
    exact = RRGreedyExactExpectation(o.f, o.m, max_leaves);
  } catch (const BudgetExceeded&) {
    return rec.Skip();
  }
  const int k = p.rank;
  const double opt = p.opt.value;
  rec.ExpectAtLeast(exact.expected_value, opt / 2, false, "E[f(A)] vs OPT/2");
  for (int i = 0; i <= k; ++i) {
    const double delta = (i > 0 && i < k) ? 1.0 / (2.0 * k * k) : 0.0;
    rec.ExpectAtLeast(exact.expected_by_step[i],
                      (GainCurve(static_cast<double>(i) / k) + delta) * opt,
                      false, "E[f(A_" + std::to_string(i) + ")]");
  }
  if (p.bases.size() <= max_pair_bases) {
    std::vector<double> base_value;
    for (const auto& t : p.bases) base_value.push_back(o.f(t));
    for (std::size_t i = 0; i < p.bases.size(); ++i) {
      for (std::size_t j = 0; j < p.bases.size(); ++j) {
        const double gain = o.f(p.bases[i].Union(p.bases[j])) - base_value[i];
        for (double x : kXGrid) {
          rec.ExpectAtLeast(
              3 * exact.expected_value,
              (1 + GainCurve(x)) * base_value[i] + (1 - x) * gain, false,
              "T1=" + p.bases[i].ToString() + ", T2=" + p.bases[j].ToString() +
                  ", x=" + Num(x));
        }
      }
    }
  }
  return rec.Done();
}

CheckResult CheckParallelGreedy(const PreparedInstance& p,
                                std::size_t max_bases) {
  Recorder rec(p, "rpgreedy");
  if (p.bases.size() > max_bases) return rec.Skip();
  const Oracles o = Build(p.instance);
  const double opt = p.opt.value;
  const ElementSet& t = p.opt.witness;
  for (const ElementSet& b : p.bases) {
    const ElementSet a = ResidualParallelGreedy(o.f, o.m, b);
    const std::string tag = "B=" + b.ToString();
    if (!o.m.IsBase(a)) rec.Fail(tag + ": output " + a.ToString() + " not a base");
    const double value = o.f(a);
    rec.ExpectAtLeast(2 * value, opt, p.integer_valued, tag + ", 2 f(A) vs OPT");
    const double gain = o.f(b.Union(t)) - opt;
    for (double x : kXGrid) {
      rec.ExpectAtLeast(3 * value, (1 + GainCurve(x)) * opt + (1 - x) * gain,
                        false, tag + ", x=" + Num(x));
    }
  }
  return rec.Done();
}

CheckResult CheckDeterministicRatio(const PreparedInstance& p) {
  Recorder rec(p, "msg-det-ratio");
  const Oracles o = Build(p.instance);
  const RunReport report = SplitAndGrowDeterministic(o.f, o.m);
  if (!o.m.IsBase(report.solution)) {
    rec.Fail("output " + report.solution.ToString() + " not a base");
  }
  const double opt = p.opt.value;
  const bool holds = p.integer_valued
                         ? 10000 * report.value >= 5008 * opt
                         : report.value >= kGuaranteedRatio * opt;
  if (!holds) {
    rec.Fail("value " + Num(report.value) + " < 0.5008 * " + Num(opt));
  }
  return rec.Done();
}

CheckResult CheckRandomizedMean(const PreparedInstance& p, int seeds) {
  Recorder rec(p, "msg-mean");
  const Oracles o = Build(p.instance);
  double total = 0;
  for (int seed = 0; seed < seeds; ++seed) {
    SolveOptions options;
    options.seed = static_cast<std::uint64_t>(seed);
    const RunReport report = SplitAndGrow(o.f, o.m, options);
    if (!o.m.IsBase(report.solution)) {
      rec.Fail("seed " + std::to_string(seed) + ": output not a base");
    }
    total += report.value;
  }
  rec.ExpectAtLeast(total / seeds, p.opt.value / 2, false, "mean vs OPT/2");
  return rec.Done();
}

CheckResult CheckScaleInvariance(const PreparedInstance& p) {
  Recorder rec(p, "scale-invariance");
  const Oracles o = Build(p.instance);
  std::vector<double> factors = {2, 0.25};
  if (p.integer_valued) factors.push_back(3);
  SolveOptions options;
  options.seed = 7;
  for (const std::string& name : AlgorithmNames()) {
    const ElementSet plain = Solve(o.f, o.m, name, options).solution;
    for (double c : factors) {
      const ElementSet scaled = Solve(Scaled(o.f, c), o.m, name, options).solution;
      if (scaled != plain) {
        rec.Fail(name + ", c=" + Num(c) + ": " + scaled.ToString() +
                 " != " + plain.ToString());
      }
    }
  }
  return rec.Done();
}

std::vector<CheckResult> RunAllChecks(const PreparedInstance& p) {
  std::vector<CheckResult> out;
  out.push_back(CheckOracleAxioms(p));
  out.push_back(CheckSplitStructure(p));
  out.push_back(CheckSplitBalance(p));
  out.push_back(CheckSplitPartition(p));
  out.push_back(CheckRandomGreedyExpectation(p));
  out.push_back(CheckParallelGreedy(p));
  out.push_back(CheckDeterministicRatio(p));
  out.push_back(CheckRandomizedMean(p));
  out.push_back(CheckScaleInvariance(p));
  return out;
}

}  // namespace submod::testkit
