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

#ifndef SUBMOD_TOOLS_CLI_SUITE_H_
#define SUBMOD_TOOLS_CLI_SUITE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "submod/parameters.h"
#include "submod/testkit/property_checks.h"

namespace submod::cli {

struct SuiteRow {
  std::string label;
  ElementId n = 0;
  int k = 0;
  std::string algorithm;
  double value = 0;
  double opt = 0;
  double ratio = 0;
  std::int64_t value_queries = 0;
  std::int64_t independence_queries = 0;
  std::optional<Parameters> params;
  std::optional<std::uint64_t> seed;

  friend bool operator==(const SuiteRow&, const SuiteRow&) = default;
};

struct AlgorithmSummary {
  std::string algorithm;
  double min_ratio = 0;
  double mean_ratio = 0;
  int rows = 0;

  friend bool operator==(const AlgorithmSummary&,
                         const AlgorithmSummary&) = default;
};

struct CheckSummary {
  std::string check;
  int ran = 0;
  int skipped = 0;
  int violations = 0;

  friend bool operator==(const CheckSummary&, const CheckSummary&) = default;
};

struct SuiteViolation {
  std::string instance;
  std::string check;
  std::string detail;

  friend bool operator==(const SuiteViolation&,
                         const SuiteViolation&) = default;
};

struct SuiteReport {
  int instances = 0;
  // Instance order of the catalog, then AlgorithmNames() order.
  std::vector<SuiteRow> rows;
  std::vector<AlgorithmSummary> algorithms;
  std::vector<CheckSummary> checks;
  std::vector<SuiteViolation> violations;

  std::size_t violation_count() const { return violations.size(); }
  friend bool operator==(const SuiteReport&, const SuiteReport&) = default;
};

struct SuiteOptions {
  int max_n = 8;
  int max_k = 3;
  int jobs = 1;
  std::uint64_t seed = 0;
};

// ratio = value / opt, and 1 when both are 0.
double Ratio(double value, double opt);

// Runs every algorithm and every testkit check over
// EnumerateSmallInstances(max_n, max_k). Throws std::invalid_argument when
// the catalog is empty (max_k < 2) or the budgets are out of range.
SuiteReport RunSuite(const SuiteOptions& options);

// One header line and one line per row; numbers in shortest round-trip form.
std::string SuiteCsv(const SuiteReport& report);
nlohmann::json SuiteToJson(const SuiteReport& report);
SuiteReport SuiteFromJson(const nlohmann::json& doc);

}  // namespace submod::cli

#endif  // SUBMOD_TOOLS_CLI_SUITE_H_
