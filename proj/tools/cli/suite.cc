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

#include "cli/suite.h"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "cli/format.h"
#include "cli/parallel.h"
#include "submod/errors.h"
#include "submod/generators.h"
#include "submod/solve.h"

namespace submod::cli {
namespace {

struct InstanceOutcome {
  std::vector<SuiteRow> rows;
  std::vector<testkit::CheckResult> checks;
  std::vector<SuiteViolation> violations;
};

InstanceOutcome RunInstance(const Instance& instance, std::uint64_t seed) {
  InstanceOutcome out;
  const testkit::PreparedInstance prepared = testkit::Prepare(instance);
  for (const std::string& name : AlgorithmNames()) {
    const Oracles o = Build(instance);
    SolveOptions options;
    options.seed = seed;
    const RunReport report = Solve(o.f, o.m, name, options);
    if (!o.m.IsBase(report.solution)) {
      out.violations.push_back({instance.label, "base-output",
                                name + " returned " +
                                    report.solution.ToString()});
    }
    SuiteRow row;
    row.label = instance.label;
    row.n = instance.n;
    row.k = prepared.rank;
    row.algorithm = name;
    row.value = report.value;
    row.opt = prepared.opt.value;
    row.ratio = Ratio(report.value, prepared.opt.value);
    row.value_queries = report.counts.value_queries;
    row.independence_queries = report.counts.independence_queries;
    row.params = report.parameters;
    row.seed = report.seed;
    out.rows.push_back(std::move(row));
  }
  out.checks = testkit::RunAllChecks(prepared);
  for (const auto& check : out.checks) {
    for (const auto& v : check.violations) {
      out.violations.push_back({v.instance, v.check, v.detail});
    }
  }
  return out;
}

nlohmann::json ParamsJson(const std::optional<Parameters>& p) {
  if (!p) return nullptr;
  return {{"x", p->x},   {"g_x", p->g_x},       {"beta", p->beta},
          {"p", p->p},   {"w_beta", p->w_beta}, {"bound", p->bound}};
}

std::optional<Parameters> ParamsFromJson(const nlohmann::json& j) {
  if (j.is_null()) return std::nullopt;
  return Parameters{j.at("x").get<double>(),    j.at("g_x").get<double>(),
                    j.at("beta").get<double>(), j.at("p").get<double>(),
                    j.at("w_beta").get<double>(), j.at("bound").get<double>()};
}

}  // namespace

double Ratio(double value, double opt) {
  if (opt == 0) return value == 0 ? 1.0 : 0.0;
  return value / opt;
}

SuiteReport RunSuite(const SuiteOptions& options) {
  if (options.max_k < 2) {
    throw std::invalid_argument(
        "--max-k must be at least 2: every suite instance needs rank >= 2");
  }
  if (options.max_k > 4 || options.max_n < 2 || options.max_n > 10) {
    throw std::invalid_argument("suite budgets: need 2 <= max_n <= 10 and "
                                "2 <= max_k <= 4");
  }
  if (options.jobs < 1) throw std::invalid_argument("--jobs must be >= 1");
  const std::vector<Instance> instances =
      EnumerateSmallInstances(options.max_n, options.max_k);
  if (instances.empty()) throw std::invalid_argument("the suite is empty");

  std::vector<InstanceOutcome> outcomes(instances.size());
  ParallelFor(instances.size(), options.jobs, [&](std::size_t i) {
    outcomes[i] = RunInstance(instances[i], options.seed);
  });

  SuiteReport report;
  report.instances = static_cast<int>(instances.size());
  std::map<std::string, CheckSummary> checks;
  std::vector<std::string> check_order;
  for (auto& outcome : outcomes) {
    for (auto& row : outcome.rows) report.rows.push_back(std::move(row));
    for (const auto& check : outcome.checks) {
      auto [it, inserted] = checks.try_emplace(check.check);
      if (inserted) {
        it->second.check = check.check;
        check_order.push_back(check.check);
      }
      (check.ran ? it->second.ran : it->second.skipped) += 1;
      it->second.violations += static_cast<int>(check.violations.size());
    }
    for (auto& v : outcome.violations) report.violations.push_back(std::move(v));
  }
  for (const auto& name : check_order) report.checks.push_back(checks[name]);

  for (const std::string& name : AlgorithmNames()) {
    AlgorithmSummary summary;
    summary.algorithm = name;
    double total = 0;
    for (const auto& row : report.rows) {
      if (row.algorithm != name) continue;
      summary.min_ratio =
          summary.rows == 0 ? row.ratio : std::min(summary.min_ratio, row.ratio);
      total += row.ratio;
      ++summary.rows;
    }
    summary.mean_ratio = summary.rows ? total / summary.rows : 0;
    report.algorithms.push_back(summary);
  }
  return report;
}

std::string SuiteCsv(const SuiteReport& report) {
  std::ostringstream os;
  os << "label,n,k,algorithm,value,opt,ratio,value_queries,"
        "independence_queries,x,beta,p,seed\n";
  for (const auto& r : report.rows) {
    os << r.label << ',' << r.n << ',' << r.k << ',' << r.algorithm << ','
       << FormatDouble(r.value) << ',' << FormatDouble(r.opt) << ','
       << FormatDouble(r.ratio) << ',' << r.value_queries << ','
       << r.independence_queries << ',';
    if (r.params) {
      os << FormatDouble(r.params->x) << ',' << FormatDouble(r.params->beta)
         << ',' << FormatDouble(r.params->p);
    } else {
      os << ",,";
    }
    os << ',';
    if (r.seed) os << *r.seed;
    os << '\n';
  }
  return os.str();
}

nlohmann::json SuiteToJson(const SuiteReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"label", r.label},
                    {"n", r.n},
                    {"k", r.k},
                    {"algorithm", r.algorithm},
                    {"value", r.value},
                    {"opt", r.opt},
                    {"ratio", r.ratio},
                    {"value_queries", r.value_queries},
                    {"independence_queries", r.independence_queries},
                    {"params", ParamsJson(r.params)},
                    {"seed", r.seed ? nlohmann::json(*r.seed) : nullptr}});
  }
  nlohmann::json algorithms = nlohmann::json::array();
  for (const auto& a : report.algorithms) {
    algorithms.push_back({{"algorithm", a.algorithm},
                          {"min_ratio", a.min_ratio},
                          {"mean_ratio", a.mean_ratio},
                          {"rows", a.rows}});
  }
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"check", c.check},
                      {"ran", c.ran},
                      {"skipped", c.skipped},
                      {"violations", c.violations}});
  }
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : report.violations) {
    violations.push_back(
        {{"instance", v.instance}, {"check", v.check}, {"detail", v.detail}});
  }
  return {{"instances", report.instances},
          {"rows", rows},
          {"summary",
           {{"algorithms", algorithms},
            {"checks", checks},
            {"violation_count", report.violation_count()}}},
          {"violations", violations}};
}

SuiteReport SuiteFromJson(const nlohmann::json& doc) {
  SuiteReport report;
  report.instances = doc.at("instances").get<int>();
  for (const auto& r : doc.at("rows")) {
    SuiteRow row;
    row.label = r.at("label").get<std::string>();
    row.n = r.at("n").get<ElementId>();
    row.k = r.at("k").get<int>();
    row.algorithm = r.at("algorithm").get<std::string>();
    row.value = r.at("value").get<double>();
    row.opt = r.at("opt").get<double>();
    row.ratio = r.at("ratio").get<double>();
    row.value_queries = r.at("value_queries").get<std::int64_t>();
    row.independence_queries = r.at("independence_queries").get<std::int64_t>();
    row.params = ParamsFromJson(r.at("params"));
    if (!r.at("seed").is_null()) row.seed = r.at("seed").get<std::uint64_t>();
    report.rows.push_back(std::move(row));
  }
  const auto& summary = doc.at("summary");
  for (const auto& a : summary.at("algorithms")) {
    report.algorithms.push_back({a.at("algorithm").get<std::string>(),
                                 a.at("min_ratio").get<double>(),
                                 a.at("mean_ratio").get<double>(),
                                 a.at("rows").get<int>()});
  }
  for (const auto& c : summary.at("checks")) {
    report.checks.push_back({c.at("check").get<std::string>(),
                             c.at("ran").get<int>(), c.at("skipped").get<int>(),
                             c.at("violations").get<int>()});
  }
  for (const auto& v : doc.at("violations")) {
    report.violations.push_back({v.at("instance").get<std::string>(),
                                 v.at("check").get<std::string>(),
                                 v.at("detail").get<std::string>()});
  }
  return report;
}

}  // namespace submod::cli
