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

#include "cli/commands.h"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli/complexity.h"
#include "cli/format.h"
#include "cli/suite.h"
#include "submod/errors.h"
#include "submod/instance_io.h"
#include "submod/solve.h"
#include "submod/testkit/brute_force.h"

namespace submod::cli {
namespace {

struct RunFlags {
  std::string instance;
  std::string algorithm = "msg-det";
  double x = kDefaultX;
  std::string p = "auto";
  std::uint64_t seed = 0;
  bool opt = false;
  std::string out;
};

struct SuiteFlags {
  SuiteOptions options;
  std::string out;
};

struct ComplexityFlags {
  std::string n_grid = "20,40,80";
  std::string k_grid = "4,8";
  std::string seeds = "0,1,2";
  std::string matroid = "partition";
  std::string function = "weighted_coverage";
  int jobs = 1;
  std::string out;
};

template <class T>
std::vector<T> ParseList(const std::string& text, const std::string& flag) {
  std::vector<T> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::istringstream is(item);
    T value;
    if (!(is >> value) || !(is >> std::ws).eof()) {
      throw std::invalid_argument(flag + ": cannot parse \"" + item + "\"");
    }
    values.push_back(value);
  }
  if (values.empty()) throw std::invalid_argument(flag + ": empty grid");
  return values;
}

void WriteFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + path.string());
  file << text;
}

int Run(const RunFlags& flags, std::ostream& out) {
  const Instance instance = LoadInstance(flags.instance);
  const auto& names = AlgorithmNames();
  if (std::find(names.begin(), names.end(), flags.algorithm) == names.end()) {
    throw std::invalid_argument("unknown algorithm \"" + flags.algorithm +
                                "\"");
  }
  SolveOptions options;
  options.x = flags.x;
  options.seed = flags.seed;
  if (flags.p != "auto") {
    std::size_t used = 0;
    double p = 0;
    try {
      p = std::stod(flags.p, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != flags.p.size()) {
      throw std::invalid_argument("--p must be a number or \"auto\"");
    }
    if (!(p >= 0 && p <= 1)) throw std::invalid_argument("--p must lie in [0, 1]");
    options.p = p;
  }
  // Rejects an x outside [0, 1) for every algorithm.
  ComputeParameters(options.x);

  const Oracles o = Build(instance);
  const RunReport report = Solve(o.f, o.m, flags.algorithm, options);
  nlohmann::json doc = RunReportToJson(report);
  doc["instance"] = instance.label;
  if (flags.opt) {
    const Oracles fresh = Build(instance);
    const testkit::OptResult opt = testkit::BruteForceOpt(fresh.f, fresh.m);
    doc["opt"] = opt.value;
    doc["opt_witness"] =
        std::vector<ElementId>(opt.witness.begin(), opt.witness.end());
    doc["ratio"] = Ratio(report.value, opt.value);
  }
  const std::string text = doc.dump(2) + "\n";
  out << text;
  if (!flags.out.empty()) WriteFile(flags.out, text);
  return kExitOk;
}

int Suite(const SuiteFlags& flags, std::ostream& out, std::ostream& err) {
  const SuiteReport report = RunSuite(flags.options);
  if (!flags.out.empty()) {
    std::filesystem::create_directories(flags.out);
    const std::filesystem::path dir(flags.out);
    WriteFile(dir / "suite.csv", SuiteCsv(report));
    WriteFile(dir / "suite.json", SuiteToJson(report).dump(2) + "\n");
  }
  out << "instances: " << report.instances << "\n";
  for (const auto& a : report.algorithms) {
    out << "  " << std::left << std::setw(9) << a.algorithm
        << " min ratio " << FormatDouble(a.min_ratio) << ", mean ratio "
        << FormatDouble(a.mean_ratio) << "\n";
  }
  for (const auto& c : report.checks) {
    out << "  check " << c.check << ": ran " << c.ran << ", skipped "
        << c.skipped << ", violations " << c.violations << "\n";
  }
  out << "violations: " << report.violation_count() << "\n";
  for (const auto& v : report.violations) {
    err << v.instance << "\t" << v.check << "\t" << v.detail << "\n";
  }
  return report.violations.empty() ? kExitOk : kExitViolation;
}

int Complexity(const ComplexityFlags& flags, std::ostream& out) {
  ComplexityOptions options;
  options.n_grid = ParseList<int>(flags.n_grid, "--n-grid");
  options.k_grid = ParseList<int>(flags.k_grid, "--k-grid");
  options.seeds = ParseList<std::uint64_t>(flags.seeds, "--seeds");
  options.instance.matroid = ParseMatroidKind(flags.matroid);
  options.instance.function = ParseFunctionKind(flags.function);
  options.jobs = flags.jobs;
  const ComplexityReport report = MeasureComplexity(options);
  if (!flags.out.empty()) {
    std::filesystem::create_directories(flags.out);
    const std::filesystem::path dir(flags.out);
    WriteFile(dir / "complexity.csv", ComplexityCsv(report));
    WriteFile(dir / "complexity.json",
              ComplexityToJson(report).dump(2) + "\n");
  }
  out << ComplexityCsv(report);
  out << "\nn,k,runs,mean_value_queries,mean_value_constant\n";
  for (const auto& c : report.cells) {
    out << c.n << ',' << c.k << ',' << c.runs << ','
        << FormatDouble(c.mean_value_queries) << ','
        << FormatDouble(c.mean_value_constant) << '\n';
  }
  out << "constant spread (max / min): "
      << FormatDouble(report.constant_spread) << "\n";
  return kExitOk;
}

}  // namespace

int Main(int argc, const char* const* argv, std::ostream& out,
         std::ostream& err) {
  CLI::App app{"Submodular maximization over matroids"};
  app.name("submod");
  app.require_subcommand(1);

  RunFlags run;
  CLI::App* run_cmd = app.add_subcommand("run", "Solve one instance");
  run_cmd->add_option("--instance", run.instance, "Instance JSON file")
      ->required();
  run_cmd->add_option("--algorithm", run.algorithm,
                      "greedy, split, rrgreedy, rpgreedy, msg or msg-det")
      ->capture_default_str();
  run_cmd->add_option("--x", run.x, "Trade-off parameter in [0, 1)")
      ->capture_default_str();
  run_cmd->add_option("--p", run.p, "Split probability, or auto")
      ->capture_default_str();
  run_cmd->add_option("--seed", run.seed, "Random seed")->capture_default_str();
  run_cmd->add_flag("--opt", run.opt, "Also compute the brute-force optimum");
  run_cmd->add_option("--out", run.out, "Also write the report to this file");

  SuiteFlags suite;
  CLI::App* suite_cmd =
      app.add_subcommand("suite", "Verify every check on the small catalog");
  suite_cmd->add_option("--max-n", suite.options.max_n)->capture_default_str();
  suite_cmd->add_option("--max-k", suite.options.max_k)->capture_default_str();
  suite_cmd->add_option("--jobs", suite.options.jobs)->capture_default_str();
  suite_cmd->add_option("--seed", suite.options.seed,
                        "Seed for the randomized algorithms")
      ->capture_default_str();
  suite_cmd->add_option("--out", suite.out,
                        "Directory for suite.csv and suite.json");

  ComplexityFlags complexity;
  CLI::App* complexity_cmd = app.add_subcommand(
      "complexity", "Count oracle queries of msg-det on random instances");
  complexity_cmd->add_option("--n-grid", complexity.n_grid)
      ->capture_default_str();
  complexity_cmd->add_option("--k-grid", complexity.k_grid)
      ->capture_default_str();
  complexity_cmd->add_option("--seeds", complexity.seeds)
      ->capture_default_str();
  complexity_cmd->add_option("--matroid", complexity.matroid,
                             "uniform, partition or graphic")
      ->capture_default_str();
  complexity_cmd->add_option("--function", complexity.function,
                             "modular, coverage, weighted_coverage or "
                             "concave_of_modular")
      ->capture_default_str();
  complexity_cmd->add_option("--jobs", complexity.jobs)->capture_default_str();
  complexity_cmd->add_option("--out", complexity.out,
                             "Directory for complexity.csv and complexity.json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (run_cmd->parsed()) return Run(run, out);
    if (suite_cmd->parsed()) return Suite(suite, out, err);
    return Complexity(complexity, out);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const InstanceError& e) {
    err << "invalid instance: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << "\n";
    return kExitViolation;
  }
}

}  // namespace submod::cli
