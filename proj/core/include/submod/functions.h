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

#ifndef SUBMOD_FUNCTIONS_H_
#define SUBMOD_FUNCTIONS_H_

#include <vector>

#include "submod/oracle.h"

namespace submod {

// f(S) = sum of weights[u] over u in S.
class ModularFunction : public LeafValueOracle {
 public:
  explicit ModularFunction(std::vector<double> weights);

  ElementId ground_size() const override {
    return static_cast<ElementId>(weights_.size());
  }

 protected:
  double Value(const ElementSet& s) const override;

 private:
  std::vector<double> weights_;
};

// f(S) = total weight of the universe items covered by some u in S, where
// element u covers covers[u].
class CoverageFunction : public LeafValueOracle {
 public:
  CoverageFunction(std::vector<double> universe_weights,
                   std::vector<std::vector<int>> covers);

  ElementId ground_size() const override {
    return static_cast<ElementId>(covers_.size());
  }

 protected:
  double Value(const ElementSet& s) const override;

 private:
  std::vector<double> universe_weights_;
  std::vector<std::vector<int>> covers_;
};

// f(S) = (sum of weights[u] over u in S)^exponent with exponent in (0, 1].
class ConcaveOfModularFunction : public LeafValueOracle {
 public:
  ConcaveOfModularFunction(std::vector<double> weights, double exponent);

  ElementId ground_size() const override {
    return static_cast<ElementId>(weights_.size());
  }

 protected:
  double Value(const ElementSet& s) const override;

 private:
  std::vector<double> weights_;
  double exponent_;
};

}  // namespace submod

#endif  // SUBMOD_FUNCTIONS_H_
