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

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

namespace submod {
namespace {

TEST(ParametersTest, DefaultX) {
  const Parameters p = ComputeParameters(0.9);
  EXPECT_DOUBLE_EQ(p.x, 0.9);
  EXPECT_NEAR(p.g_x, 0.495, 1e-15);
  EXPECT_NEAR(p.beta, 0.354839, 1e-6);
  EXPECT_NEAR(p.p, 0.425822, 1e-6);
  EXPECT_NEAR(p.bound, 0.500870, 1e-6);
  EXPECT_GT(p.bound, 0.5008);
}

TEST(ParametersTest, ClosedFormsAgree) {
  for (double x : {0.0, 0.1, 0.3, 0.5, 0.7, 0.9, 0.99}) {
    const Parameters p = ComputeParameters(x);
    const double g = x - x * x / 2;
    EXPECT_DOUBLE_EQ(p.g_x, g);
    // (2 - x - 2g) / (4 - 3x - 2g) simplifies to (2 - x) / (4 - x).
    EXPECT_NEAR(p.beta, (2 - x) / (4 - x), 1e-14);
    const double root = std::sqrt((1 - p.beta) * p.beta);
    EXPECT_NEAR(p.p, p.beta / (p.beta + root), 1e-14);
    EXPECT_NEAR(p.w_beta, 2.0 / 3 * (1 - root), 1e-14);
    EXPECT_NEAR(p.bound, (1 + g + (4 - 3 * x - 2 * g) * p.w_beta) / (5 - 2 * x),
                1e-14);
  }
}

TEST(ParametersTest, XZero) {
  const Parameters p = ComputeParameters(0);
  EXPECT_EQ(p.g_x, 0);
  EXPECT_DOUBLE_EQ(p.beta, 0.5);
  EXPECT_DOUBLE_EQ(p.p, 0.5);
  EXPECT_NEAR(p.bound, (1 + 4.0 / 3) / 5, 1e-15);
}

TEST(ParametersTest, RejectsXOutsideRange) {
  EXPECT_THROW(ComputeParameters(1), std::invalid_argument);
  EXPECT_THROW(ComputeParameters(-0.1), std::invalid_argument);
  EXPECT_THROW(ComputeParameters(std::nan("")), std::invalid_argument);
}

TEST(ParametersTest, SplitProbabilityRange) {
  EXPECT_DOUBLE_EQ(SplitProbability(0.5), 0.5);
  EXPECT_NO_THROW(SplitProbability(0.2));
  EXPECT_NO_THROW(SplitProbability(0.8));
  EXPECT_THROW(SplitProbability(0.19), std::invalid_argument);
  EXPECT_THROW(SplitProbability(0.81), std::invalid_argument);
}

TEST(ParametersTest, GainCurve) {
  EXPECT_EQ(GainCurve(0), 0);
  EXPECT_EQ(GainCurve(1), 0.5);
  EXPECT_DOUBLE_EQ(GainCurve(0.5), 0.375);
}

}  // namespace
}  // namespace submod
