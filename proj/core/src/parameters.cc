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

#include "submod/parameters.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace submod {
namespace {

void CheckBeta(double beta) {
  if (!(beta >= 0.2 && beta <= 0.8)) {
    throw std::invalid_argument("beta = " + std::to_string(beta) +
                                " is outside [1/5, 4/5]");
  }
}

}  // namespace

double GainCurve(double x) { return x - x * x / 2; }

double SplitProbability(double beta) {
  CheckBeta(beta);
  return beta / (beta + std::sqrt((1 - beta) * beta));
}

double SplitGuarantee(double beta) {
  return 2.0 / 3.0 * (1 - std::sqrt((1 - beta) * beta));
}

Parameters ComputeParameters(double x) {
  if (!(x >= 0 && x < 1)) {
    throw std::invalid_argument("x must lie in [0, 1), got " +
                                std::to_string(x));
  }
  Parameters params;
  params.x = x;
  params.g_x = GainCurve(x);
  const double a_weight = 2 - x - 2 * params.g_x;
  const double total_weight = 4 - 3 * x - 2 * params.g_x;
  params.beta = a_weight / total_weight;
  CheckBeta(params.beta);
  params.p = SplitProbability(params.beta);
  params.w_beta = SplitGuarantee(params.beta);
  params.bound =
      (1 + params.g_x + total_weight * params.w_beta) / (5 - 2 * x);
  return params;
}

}  // namespace submod
