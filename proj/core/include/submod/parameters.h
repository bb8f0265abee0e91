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

#ifndef SUBMOD_PARAMETERS_H_
#define SUBMOD_PARAMETERS_H_

namespace submod {

inline constexpr double kDefaultX = 0.9;

// Tuning of the split-and-grow algorithms for a given x in [0, 1).
struct Parameters {
  double x = 0;
  // g(x) = x - x^2 / 2.
  double g_x = 0;
  // Weight given to the A side of the split.
  double beta = 0;
  // Split probability derived from beta.
  double p = 0;
  // Guaranteed split value w(beta) = (2/3)(1 - sqrt((1 - beta) beta)).
  double w_beta = 0;
  // Resulting approximation guarantee.
  double bound = 0;

  friend bool operator==(const Parameters&, const Parameters&) = default;
};

double GainCurve(double x);

// p = beta / (beta + sqrt((1 - beta) beta)). Requires beta in [1/5, 4/5].
double SplitProbability(double beta);

// w(beta) = (2/3)(1 - sqrt((1 - beta) beta)).
double SplitGuarantee(double beta);

// beta = (2 - x - 2g(x)) / (4 - 3x - 2g(x)),
// bound = (1 + g(x) + (4 - 3x - 2g(x)) w(beta)) / (5 - 2x).
// Throws std::invalid_argument for x outside [0, 1) (x = 1 makes beta 0/0)
// or when beta leaves [1/5, 4/5], the range the split guarantee needs.
Parameters ComputeParameters(double x);

}  // namespace submod

#endif  // SUBMOD_PARAMETERS_H_
