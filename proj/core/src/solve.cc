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

#include "submod/solve.h"

#include <algorithm>
#include <stdexcept>

namespace submod {
namespace {

using Clock = std::chrono::steady_clock;

// Tracks the queries and time spent between construction and Finish().
class RunScope {
 public:
  RunScope(const SetFunction& f, const Matroid& m, std::string algorithm)
      : f_(f),
        m_(m),
        start_value_(f.counts().value_queries),
        start_independence_(m.counts().independence_queries),
        start_(Clock::now()) {
    report_.algorithm = std::move(algorithm);
  }

  RunReport& report() { return report_; }

  RunReport Finish(ElementSet solution) {
    report_.solution = std::move(solution);
    report_.value = f_(report_.solution);
    report_.counts.value_queries = f_.counts().value_queries - start_value_;
    report_.counts.independence_queries =
        m_.counts().independence_queries - start_independence_;
    report_.elapsed = Clock::now() - start_;
    return std::move(report_);
  }

 private:
  const SetFunction& f_;
  const Matroid& m_;
  std::int64_t start_value_;
  std::int64_t start_independence_;
  Clock::time_point start_;
  RunReport report_;
};

Parameters ResolveParameters(const SolveOptions& options) {
  Parameters params = ComputeParameters(options.x);
  if (options.p) {
    if (!(*options.p >= 0 && *options.p <= 1)) {
      throw std::invalid_argument("p must lie in [0, 1]");
    }
    params.p = *options.p;
  }
  return params;
}

// Runs the split, grows both sides with `grow`, and keeps the better base.
template <class Grow>
ElementSet SplitThenGrow(const SetFunction& f, const Matroid& m, double p,
                         Grow grow) {
  const SplitResult split = Split(f, m, p);
  const ElementSet a = split.a.Union(
      grow(MarginalFunction(f, split.a), Contract(m, split.a), split.b, 0));
  const ElementSet b = split.b.Union(
      grow(MarginalFunction(f, split.b), Contract(m, split.b), split.a, 1));
  return f(a) >= f(b) ? a : b;
}

}  // namespace

const std::vector<std::string>& AlgorithmNames() {
  static const std::vector<std::string> names = {
      "greedy", "split", "rrgreedy", "rpgreedy", "msg", "msg-det"};
  return names;
}

ElementSet BestSingleton(const SetFunction& f, const Matroid& m) {
  ElementSet best;
  double best_value = 0;
  for (ElementId u : m.ground()) {
    const ElementSet single{u};
    if (!m.IsIndependent(single)) continue;
    const double value = f(single);
    if (best.empty() || value > best_value) {
      best = single;
      best_value = value;
    }
  }
  return best;
}

RunReport SplitAndGrow(const SetFunction& f, const Matroid& m,
                       const SolveOptions& options) {
  RunScope scope(f, m, "msg");
  const Parameters params = ResolveParameters(options);
  scope.report().parameters = params;
  scope.report().seed = options.seed;
  if (m.rank() <= 1) return scope.Finish(BestSingleton(f, m));
  return scope.Finish(SplitThenGrow(
      f, m, params.p,
      [&](const SetFunction& g, const Matroid& residual, const ElementSet&,
          int side) {
        return ResidualRandomGreedy(g, residual, options.seed + side);
      }));
}

RunReport SplitAndGrowDeterministic(const SetFunction& f, const Matroid& m,
                                    const SolveOptions& options) {
  RunScope scope(f, m, "msg-det");
  const Parameters params = ResolveParameters(options);
  scope.report().parameters = params;
  if (m.rank() <= 1) return scope.Finish(BestSingleton(f, m));
  return scope.Finish(SplitThenGrow(
      f, m, params.p,
      [](const SetFunction& g, const Matroid& residual,
         const ElementSet& other_side, int) {
        return ResidualParallelGreedy(g, residual, other_side);
      }));
}

RunReport Solve(const SetFunction& f, const Matroid& m,
                const std::string& algorithm, const SolveOptions& options) {
  const auto& names = AlgorithmNames();
  if (std::find(names.begin(), names.end(), algorithm) == names.end()) {
    throw std::invalid_argument("unknown algorithm \"" + algorithm + "\"");
  }
  if (algorithm == "msg") return SplitAndGrow(f, m, options);
  if (algorithm == "msg-det") return SplitAndGrowDeterministic(f, m, options);

  RunScope scope(f, m, algorithm);
  if (algorithm == "split") scope.report().parameters = ResolveParameters(options);
  if (algorithm == "rrgreedy") scope.report().seed = options.seed;
  if (m.rank() <= 1) return scope.Finish(BestSingleton(f, m));

  if (algorithm == "greedy") return scope.Finish(ClassicalGreedy(f, m));
  if (algorithm == "split") {
    const SplitResult split = Split(f, m, scope.report().parameters->p);
    return scope.Finish(split.a.Union(split.b));
  }
  if (algorithm == "rrgreedy") {
    return scope.Finish(ResidualRandomGreedy(f, m, options.seed));
  }
  // rpgreedy
  const std::vector<double> zeros(f.n(), 0.0);
  return scope.Finish(ResidualParallelGreedy(f, m, MaxWeightBase(m, zeros)));
}

nlohmann::json RunReportToJson(const RunReport& report) {
  nlohmann::json doc;
  doc["algorithm"] = report.algorithm;
  doc["solution"] = std::vector<ElementId>(report.solution.begin(),
                                           report.solution.end());
  doc["value"] = report.value;
  doc["counts"] = {{"value_queries", report.counts.value_queries},
                   {"independence_queries", report.counts.independence_queries}};
  if (report.parameters) {
    const Parameters& p = *report.parameters;
    doc["parameters"] = {{"x", p.x},         {"g_x", p.g_x},
                         {"beta", p.beta},   {"p", p.p},
                         {"w_beta", p.w_beta}, {"bound", p.bound}};
  } else {
    doc["parameters"] = nullptr;
  }
  if (report.seed) {
    doc["seed"] = *report.seed;
  } else {
    doc["seed"] = nullptr;
  }
  doc["elapsed_seconds"] = report.elapsed.count();
  return doc;
}

RunReport RunReportFromJson(const nlohmann::json& doc) {
  RunReport report;
  report.algorithm = doc.at("algorithm").get<std::string>();
  report.solution = ElementSet::FromUnsorted(
      doc.at("solution").get<std::vector<ElementId>>());
  report.value = doc.at("value").get<double>();
  report.counts.value_queries =
      doc.at("counts").at("value_queries").get<std::int64_t>();
  report.counts.independence_queries =
      doc.at("counts").at("independence_queries").get<std::int64_t>();
  if (const auto& p = doc.at("parameters"); !p.is_null()) {
    report.parameters = Parameters{p.at("x").get<double>(),
                                   p.at("g_x").get<double>(),
                                   p.at("beta").get<double>(),
                                   p.at("p").get<double>(),
                                   p.at("w_beta").get<double>(),
                                   p.at("bound").get<double>()};
  }
  if (const auto& s = doc.at("seed"); !s.is_null()) {
    report.seed = s.get<std::uint64_t>();
  }
  report.elapsed =
      std::chrono::duration<double>(doc.at("elapsed_seconds").get<double>());
  return report;
}

}  // namespace submod
