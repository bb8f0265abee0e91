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

#include "cli/complexity.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cli/format.h"
#include "cli/parallel.h"
#include "submod/instance.h"
#include "submod/solve.h"

namespace submod::cli {

ComplexityReport MeasureComplexity(const ComplexityOptions& options) {
  if (options.n_grid.empty() || options.k_grid.empty() ||
      options.seeds.empty()) {
    throw std::invalid_argument("complexity grids must be non-empty");
  }
  for (int v : options.n_grid) {
    if (v < 2) throw std::invalid_argument("--n-grid entries must be >= 2");
  }
  for (int v : options.k_grid) {
    if (v < 1) throw std::invalid_argument("--k-grid entries must be >= 1");
  }
  if (options.jobs < 1) throw std::invalid_argument("--jobs must be >= 1");

  ComplexityReport report;
  for (int n : options.n_grid) {
    for (int k : options.k_grid) {
      for (std::uint64_t seed : options.seeds) {
        report.rows.push_back({n, k, seed, 0, 0, 0, 0, ""});
      }
    }
  }
  ParallelFor(report.rows.size(), options.jobs, [&](std::size_t i) {
    ComplexityRow& row = report.rows[i];
    if (row.k > row.n) {
      row.note = "skipped: k > n";
      return;
    }
    RandomInstanceOptions instance_options = options.instance;
    instance_options.rank = row.k;
    const Instance instance = RandomInstance(row.seed, row.n, instance_options);
    const Oracles o = Build(instance);
    const RunReport run = SplitAndGrowDeterministic(o.f, o.m);
    const double scale = static_cast<double>(row.n) * row.k * row.k;
    row.value_queries = run.counts.value_queries;
    row.independence_queries = run.counts.independence_queries;
    row.value_constant = row.value_queries / scale;
    row.independence_constant = row.independence_queries / scale;
  });

  for (int n : options.n_grid) {
    for (int k : options.k_grid) {
      ComplexityCell cell{n, k, 0, 0, 0};
      for (const auto& row : report.rows) {
        if (row.n != n || row.k != k || !row.note.empty()) continue;
        ++cell.runs;
        cell.mean_value_queries += row.value_queries;
        cell.mean_value_constant += row.value_constant;
      }
      if (cell.runs == 0) continue;
      cell.mean_value_queries /= cell.runs;
      cell.mean_value_constant /= cell.runs;
      report.cells.push_back(cell);
    }
  }
  if (!report.cells.empty()) {
    const auto [lo, hi] = std::minmax_element(
        report.cells.begin(), report.cells.end(),
        [](const auto& a, const auto& b) {
          return a.mean_value_constant < b.mean_value_constant;
        });
    report.constant_spread = hi->mean_value_constant / lo->mean_value_constant;
  }
  return report;
}

std::string ComplexityCsv(const ComplexityReport& report) {
  std::ostringstream os;
  os << "n,k,seed,value_queries,independence_queries,value_constant,"
        "independence_constant,note\n";
  for (const auto& r : report.rows) {
    os << r.n << ',' << r.k << ',' << r.seed << ',' << r.value_queries << ','
       << r.independence_queries << ',' << FormatDouble(r.value_constant)
       << ',' << FormatDouble(r.independence_constant) << ',' << r.note
       << '\n';
  }
  return os.str();
}

nlohmann::json ComplexityToJson(const ComplexityReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"n", r.n},
                    {"k", r.k},
                    {"seed", r.seed},
                    {"value_queries", r.value_queries},
                    {"independence_queries", r.independence_queries},
                    {"value_constant", r.value_constant},
                    {"independence_constant", r.independence_constant},
                    {"note", r.note}});
  }
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& c : report.cells) {
    cells.push_back({{"n", c.n},
                     {"k", c.k},
                     {"runs", c.runs},
                     {"mean_value_queries", c.mean_value_queries},
                     {"mean_value_constant", c.mean_value_constant}});
  }
  return {{"rows", rows},
          {"cells", cells},
          {"constant_spread", report.constant_spread}};
}

ComplexityReport ComplexityFromJson(const nlohmann::json& doc) {
  ComplexityReport report;
  for (const auto& r : doc.at("rows")) {
    report.rows.push_back({r.at("n").get<int>(), r.at("k").get<int>(),
                           r.at("seed").get<std::uint64_t>(),
                           r.at("value_queries").get<std::int64_t>(),
                           r.at("independence_queries").get<std::int64_t>(),
                           r.at("value_constant").get<double>(),
                           r.at("independence_constant").get<double>(),
                           r.at("note").get<std::string>()});
  }
  for (const auto& c : doc.at("cells")) {
    report.cells.push_back({c.at("n").get<int>(), c.at("k").get<int>(),
                            c.at("runs").get<int>(),
                            c.at("mean_value_queries").get<double>(),
                            c.at("mean_value_constant").get<double>()});
  }
  report.constant_spread = doc.at("constant_spread").get<double>();
  return report;
}

}  // namespace submod::cli
