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

#include "submod/algorithms.h"

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "submod/generators.h"
#include "submod/instance.h"
#include "submod/parameters.h"
#include "submod/testkit/brute_force.h"
#include "test_util.h"

namespace submod {
namespace {

using test::MakeInstance;
using test::UnitCoverage;

TEST(ClassicalGreedyTest, ModularUniform) {
  const Oracles o = Build(test::UniformModular(2, {5, 1, 3}));
  EXPECT_EQ(ClassicalGreedy(o.f, o.m), (ElementSet{0, 2}));
  EXPECT_EQ(testkit::BruteForceOpt(o.f, o.m).witness, (ElementSet{0, 2}));
}

TEST(ClassicalGreedyTest, ZeroFunctionGivesFirstBase) {
  const Oracles o =
      Build(MakeInstance(3, test::TwoPartSpec(), ModularSpec{{0, 0, 0}}));
  EXPECT_EQ(ClassicalGreedy(o.f, o.m), (ElementSet{0, 2}));
}

TEST(ClassicalGreedyTest, Coverage) {
  const Oracles o = Build(test::ThreeSetCoverage());
  const ElementSet s = ClassicalGreedy(o.f, o.m);
  EXPECT_EQ(s, (ElementSet{0, 1}));
  EXPECT_EQ(o.f(s), 3);
}

TEST(MaxWeightBaseTest, Examples) {
  const Oracles u = Build(test::UniformModular(2, {1, 1, 1}));
  const std::vector<double> w = {5, 1, 3};
  EXPECT_EQ(MaxWeightBase(u.m, w), (ElementSet{0, 2}));
  const std::vector<double> equal = {1, 1, 1};
  EXPECT_EQ(MaxWeightBase(u.m, equal), (ElementSet{0, 1}));

  const Oracles p =
      Build(MakeInstance(3, test::TwoPartSpec(), ModularSpec{{1, 1, 1}}));
  const std::vector<double> pw = {2, 3, 1};
  EXPECT_EQ(MaxWeightBase(p.m, pw), (ElementSet{1, 2}));
}

TEST(MaxWeightBaseTest, IsOptimalOnCatalog) {
  for (const Instance& instance : EnumerateSmallInstances(7, 3)) {
    const Oracles o = Build(instance);
    std::vector<double> w(instance.n);
    for (ElementId u = 0; u < instance.n; ++u) w[u] = (u * 7 + 3) % 5;
    const ElementSet base = MaxWeightBase(o.m, w);
    ASSERT_TRUE(o.m.IsBase(base));
    auto total = [&](const ElementSet& s) {
      double t = 0;
      for (ElementId u : s) t += w[u];
      return t;
    };
    for (const ElementSet& other : testkit::EnumerateBases(o.m)) {
      ASSERT_GE(total(base), total(other)) << instance.label;
    }
  }
}

TEST(MaxWeightBaseTest, RejectsNonFiniteWeights) {
  const Oracles u = Build(test::UniformModular(2, {1, 1, 1}));
  const std::vector<double> w = {1, std::nan(""), 1};
  EXPECT_THROW(MaxWeightBase(u.m, w), std::invalid_argument);
  const std::vector<double> short_w = {1};
  EXPECT_THROW(MaxWeightBase(u.m, short_w), std::invalid_argument);
}

TEST(SplitTest, TiesGoToA) {
  const Oracles o = Build(test::UniformModular(2, {2, 1}));
  EXPECT_EQ(Split(o.f, o.m, 0.5), (SplitResult{{0, 1}, {}}));
}

TEST(SplitTest, PZeroSendsEverythingToB) {
  const Oracles o = Build(test::UniformModular(2, {2, 1}));
  EXPECT_EQ(Split(o.f, o.m, 0), (SplitResult{{}, {0, 1}}));
}

TEST(SplitTest, CoverageHandTrace) {
  const Oracles o = Build(test::ThreeSetCoverage());
  EXPECT_EQ(Split(o.f, o.m, 0.5), (SplitResult{{0}, {1}}));
}

TEST(SplitTest, RejectsBadP) {
  const Oracles o = Build(test::ThreeSetCoverage());
  EXPECT_THROW(Split(o.f, o.m, 1.5), std::invalid_argument);
  EXPECT_THROW(Split(o.f, o.m, -0.1), std::invalid_argument);
  EXPECT_THROW(Split(o.f, o.m, std::nan("")), std::invalid_argument);
}

TEST(SplitTest, DisjointAndUnionIsBase) {
  for (const Instance& instance : EnumerateSmallInstances(8, 3)) {
    const Oracles o = Build(instance);
    for (double p : {0.0, 0.25, 0.425822, 0.5, 0.75, 1.0}) {
      const SplitResult s = Split(o.f, o.m, p);
      ASSERT_TRUE(s.a.IsDisjointFrom(s.b)) << instance.label;
      ASSERT_TRUE(o.m.IsBase(s.a.Union(s.b))) << instance.label << " p=" << p;
    }
  }
}

TEST(ResidualRandomGreedyTest, ForcedDraw) {
  const Oracles o = Build(test::UniformModular(1, {1, 5, 2}));
  for (std::uint64_t seed : {0, 1, 99}) {
    EXPECT_EQ(ResidualRandomGreedy(o.f, o.m, seed), (ElementSet{1}));
  }
}

TEST(ResidualRandomGreedyTest, UniqueBase) {
  const Oracles o = Build(MakeInstance(2, UniformSpec{2},
                                       UnitCoverage({{0}, {0, 1}})));
  EXPECT_EQ(ResidualRandomGreedy(o.f, o.m, 3), (ElementSet{0, 1}));
}

TEST(ResidualRandomGreedyTest, ReproducibleAndBase) {
  for (const Instance& instance : EnumerateSmallInstances(7, 3)) {
    const Oracles o = Build(instance);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const ElementSet a = ResidualRandomGreedy(o.f, o.m, seed);
      ASSERT_TRUE(o.m.IsBase(a));
      ASSERT_EQ(a, ResidualRandomGreedy(o.f, o.m, seed));
    }
  }
}

TEST(ResidualRandomGreedyTest, RankZeroGivesEmptySet) {
  const Oracles o = Build(test::UniformModular(2, {1, 2, 3}));
  const Matroid c = Contract(o.m, {0, 1});
  EXPECT_TRUE(ResidualRandomGreedy(o.f, c, 0).empty());
}

TEST(ResidualParallelGreedyTest, SingleColumn) {
  const Oracles o = Build(test::UniformModular(1, {1, 5, 2}));
  const ElementSet a = ResidualParallelGreedy(o.f, o.m, {2});
  EXPECT_EQ(a, (ElementSet{1}));
  EXPECT_EQ(o.f(a), 5);
}

TEST(ResidualParallelGreedyTest, UniqueBase) {
  const Oracles o = Build(MakeInstance(2, UniformSpec{2},
                                       UnitCoverage({{0}, {0, 1}})));
  EXPECT_EQ(ResidualParallelGreedy(o.f, o.m, {0, 1}), (ElementSet{0, 1}));
}

TEST(ResidualParallelGreedyTest, RejectsNonBase) {
  const Oracles o = Build(test::ThreeSetCoverage());
  EXPECT_THROW(ResidualParallelGreedy(o.f, o.m, {0}), std::invalid_argument);
  EXPECT_THROW(ResidualParallelGreedy(o.f, o.m, {0, 1, 2}),
               std::invalid_argument);
}

TEST(ResidualParallelGreedyTest, HalfOfOptimumFromEveryBase) {
  for (const Instance& instance : EnumerateSmallInstances(7, 3)) {
    const Oracles o = Build(instance);
    const auto bases = testkit::EnumerateBases(o.m);
    const double opt = testkit::BruteForceOpt(o.f, bases).value;
    for (const ElementSet& b : bases) {
      const ElementSet a = ResidualParallelGreedy(o.f, o.m, b);
      ASSERT_TRUE(o.m.IsBase(a));
      ASSERT_GE(o.f(a), opt / 2 - 1e-9) << instance.label << " B=" << b;
    }
  }
}

}  // namespace
}  // namespace submod
