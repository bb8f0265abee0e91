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

#include "submod/functions.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace submod {
namespace {

void CheckWeights(const std::vector<double>& w, const char* what) {
  for (double x : w) {
    if (!std::isfinite(x) || x < 0) {
      throw std::invalid_argument(std::string(what) +
                                  ": weights must be finite and >= 0");
    }
  }
}

}  // namespace

ModularFunction::ModularFunction(std::vector<double> weights)
    : weights_(std::move(weights)) {
  CheckWeights(weights_, "ModularFunction");
}

double ModularFunction::Value(const ElementSet& s) const {
  double total = 0;
  for (ElementId u : s) total += weights_[u];
  return total;
}

CoverageFunction::CoverageFunction(std::vector<double> universe_weights,
                                   std::vector<std::vector<int>> covers)
    : universe_weights_(std::move(universe_weights)),
      covers_(std::move(covers)) {
  CheckWeights(universe_weights_, "CoverageFunction");
  const int universe = static_cast<int>(universe_weights_.size());
  for (const auto& c : covers_) {
    for (int item : c) {
      if (item < 0 || item >= universe) {
        throw std::invalid_argument("CoverageFunction: item " +
                                    std::to_string(item) + " out of range");
      }
    }
  }
}

double CoverageFunction::Value(const ElementSet& s) const {
  std::vector<char> covered(universe_weights_.size(), 0);
  for (ElementId u : s) {
    for (int item : covers_[u]) covered[item] = 1;
  }
  double total = 0;
  for (std::size_t i = 0; i < covered.size(); ++i) {
    if (covered[i]) total += universe_weights_[i];
  }
  return total;
}

ConcaveOfModularFunction::ConcaveOfModularFunction(std::vector<double> weights,
                                                   double exponent)
    : weights_(std::move(weights)), exponent_(exponent) {
  CheckWeights(weights_, "ConcaveOfModularFunction");
  if (!(exponent > 0 && exponent <= 1)) {
    throw std::invalid_argument(
        "ConcaveOfModularFunction: exponent must be in (0, 1]");
  }
}

double ConcaveOfModularFunction::Value(const ElementSet& s) const {
  double total = 0;
  for (ElementId u : s) total += weights_[u];
  return std::pow(total, exponent_);
}

}  // namespace submod
