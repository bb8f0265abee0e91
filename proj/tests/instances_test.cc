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

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <set>
#include <stdexcept>

#include "submod/errors.h"
#include "submod/generators.h"
#include "submod/instance.h"
#include "submod/instance_io.h"
#include "submod/matroids.h"
#include "submod/testkit/brute_force.h"
#include "submod/testkit/validators.h"
#include "test_util.h"

namespace submod {
namespace {

using test::MakeInstance;
using test::UnitCoverage;

Instance Triangle(FunctionSpec f) {
  return MakeInstance(3, GraphicSpec{3, {{0, 1}, {1, 2}, {0, 2}}},
                      std::move(f), "tri");
}

TEST(BuildTest, UniformModular) {
  const Oracles o = Build(test::UniformModular(2, {2, 1}));
  EXPECT_EQ(o.f({0, 1}), 3);
  EXPECT_TRUE(o.m.IsIndependent({0, 1}));
}

TEST(BuildTest, GraphicTriangle) {
  const Oracles o = Build(Triangle(ModularSpec{{1, 1, 1}}));
  EXPECT_EQ(o.m.rank(), 2);
  EXPECT_FALSE(o.m.IsIndependent({0, 1, 2}));
  EXPECT_TRUE(o.m.IsIndependent({0, 1}));
  EXPECT_TRUE(o.m.IsIndependent({1, 2}));
  EXPECT_TRUE(o.m.IsIndependent({0, 2}));
}

TEST(BuildTest, CoverageUnion) {
  const Oracles o = Build(test::ThreeSetCoverage());
  EXPECT_EQ(o.f({0, 1}), 3);
  EXPECT_EQ(o.f({2}), 1);
  EXPECT_EQ(o.f({}), 0);
}

TEST(BuildTest, ConcaveOfModular) {
  const Oracles o = Build(MakeInstance(
      2, UniformSpec{2}, ConcaveOfModularSpec{{4, 5}, 0.5}));
  EXPECT_DOUBLE_EQ(o.f({0, 1}), 3);
  EXPECT_DOUBLE_EQ(o.f({0}), 2);
}

TEST(BuildTest, InconsistentSpecsNameTheField) {
  auto expect_field = [](const Instance& instance, const std::string& field) {
    try {
      Build(instance);
      ADD_FAILURE() << "expected InstanceError for " << field;
    } catch (const InstanceError& e) {
      EXPECT_EQ(e.field(), field) << e.what();
    }
  };
  expect_field(MakeInstance(3, PartitionSpec{{{0, 1}, {2}}, {1}},
                            ModularSpec{{1, 1, 1}}),
               "matroid.capacities");
  expect_field(MakeInstance(3, UniformSpec{2}, ModularSpec{{1, 1}}),
               "function.weights");
  expect_field(MakeInstance(3, UniformSpec{0}, ModularSpec{{1, 1, 1}}),
               "matroid.k");
}

TEST(GraphicRankTest, MatchesLargestIndependentSet) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    RandomInstanceOptions options;
    options.matroid = MatroidKind::kGraphic;
    options.rank = 1 + static_cast<int>(seed % 5);
    const Instance instance = RandomInstance(seed, 8, options);
    const auto& spec = std::get<GraphicSpec>(instance.matroid);
    const Oracles o = Build(instance);
    int largest = 0;
    for (std::uint64_t s = 0; s < (1u << 8); ++s) {
      const ElementSet set = FromMask(s);
      if (o.m.IsIndependent(set)) {
        largest = std::max(largest, static_cast<int>(set.size()));
      }
    }
    EXPECT_EQ(GraphicRank(spec.num_vertices, spec.edges), largest);
    EXPECT_EQ(o.m.rank(), largest);
  }
}

TEST(InstanceIoTest, PartitionRoundTrip) {
  const Instance instance =
      MakeInstance(3, test::TwoPartSpec(), ModularSpec{{2, 0.5, 3}}, "part");
  EXPECT_EQ(ParseInstance(SerializeInstance(instance)), instance);

  const auto path = std::filesystem::temp_directory_path() / "submod_io.json";
  SaveInstance(instance, path);
  EXPECT_EQ(LoadInstance(path), instance);
  std::filesystem::remove(path);
}

TEST(InstanceIoTest, CatalogRoundTrip) {
  for (const Instance& instance : EnumerateSmallInstances(6, 3)) {
    ASSERT_EQ(ParseInstance(SerializeInstance(instance)), instance)
        << instance.label;
  }
  RandomInstanceOptions options;
  options.function = FunctionKind::kConcaveOfModular;
  const Instance random = RandomInstance(3, 9, options);
  EXPECT_EQ(ParseInstance(SerializeInstance(random)), random);
}

TEST(InstanceIoTest, SpecExampleParses) {
  const Instance instance = ParseInstance(
      R"({"n":3,"label":"tri","matroid":{"kind":"graphic","num_vertices":3,)"
      R"("edges":[[0,1],[1,2],[0,2]]},"function":{"kind":"coverage",)"
      R"("universe_weights":[1,1,1],"covers":[[0,1],[1,2],[2]]}})");
  EXPECT_EQ(instance.label, "tri");
  EXPECT_EQ(InstanceRank(instance), 2);
  const Oracles o = Build(instance);
  EXPECT_EQ(o.f({0, 1}), 3);
}

TEST(InstanceIoTest, MalformedCapacities) {
  EXPECT_THROW(
      ParseInstance(
          R"({"n":3,"label":"x","matroid":{"kind":"partition",)"
          R"("parts":[[0,1],[2]],"capacities":[1]},)"
          R"("function":{"kind":"modular","weights":[1,1,1]}})"),
      InstanceError);
}

TEST(InstanceIoTest, UnknownKind) {
  try {
    ParseInstance(R"({"n":2,"label":"x","matroid":{"kind":"linear"},)"
                  R"("function":{"kind":"modular","weights":[1,1]}})");
    FAIL();
  } catch (const InstanceError& e) {
    EXPECT_EQ(e.field(), "matroid.kind");
  }
}

TEST(InstanceIoTest, SyntaxErrorReportsPosition) {
  try {
    ParseInstance("{\n  \"n\": 3,\n  oops\n}");
    FAIL();
  } catch (const InstanceError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos)
        << e.what();
  }
}

TEST(InstanceIoTest, EmptyCoversGiveZeroFunction) {
  const Instance instance = ParseInstance(
      R"({"n":2,"label":"zero","matroid":{"kind":"uniform","k":1},)"
      R"("function":{"kind":"coverage","covers":[[],[]]}})");
  const Oracles o = Build(instance);
  EXPECT_EQ(o.f({0, 1}), 0);
  EXPECT_EQ(o.f({}), 0);
}

TEST(EnumerateTest, SmallBudgetIsNonEmptyWithRankAtLeastTwo) {
  const auto instances = EnumerateSmallInstances(4, 2);
  ASSERT_FALSE(instances.empty());
  for (const auto& instance : instances) {
    EXPECT_GE(InstanceRank(instance), 2) << instance.label;
    EXPECT_LE(InstanceRank(instance), 2) << instance.label;
  }
}

TEST(EnumerateTest, Deterministic) {
  EXPECT_EQ(EnumerateSmallInstances(6, 3), EnumerateSmallInstances(6, 3));
}

TEST(EnumerateTest, CoversAllFamilies) {
  std::set<std::string> matroids, functions;
  for (const auto& instance : EnumerateSmallInstances(8, 3)) {
    matroids.insert(KindName(instance.matroid));
    functions.insert(KindName(instance.function));
  }
  EXPECT_EQ(matroids, (std::set<std::string>{"uniform", "partition", "graphic"}));
  EXPECT_EQ(functions,
            (std::set<std::string>{"modular", "coverage", "weighted_coverage",
                                   "concave_of_modular"}));
}

TEST(EnumerateTest, RejectsLargeBudgets) {
  EXPECT_THROW(EnumerateSmallInstances(11, 3), std::invalid_argument);
  EXPECT_THROW(EnumerateSmallInstances(8, 5), std::invalid_argument);
  EXPECT_TRUE(EnumerateSmallInstances(8, 1).empty());
}

TEST(EnumerateTest, EveryInstancePassesValidators) {
  for (const auto& instance : EnumerateSmallInstances(8, 3)) {
    const Oracles o = Build(instance);
    const auto f_report = testkit::ValidateMonotoneSubmodular(o.f, instance.n);
    ASSERT_TRUE(f_report.ok()) << instance.label << ": "
                               << f_report.violations.front();
    const auto m_report = testkit::ValidateMatroidAxioms(o.m, instance.n);
    ASSERT_TRUE(m_report.ok()) << instance.label << ": "
                               << m_report.violations.front();
  }
}

TEST(RandomInstanceTest, SameSeedSameInstance) {
  for (auto kind : {MatroidKind::kUniform, MatroidKind::kPartition,
                    MatroidKind::kGraphic}) {
    RandomInstanceOptions options;
    options.matroid = kind;
    options.rank = 3;
    EXPECT_EQ(RandomInstance(42, 9, options), RandomInstance(42, 9, options));
    EXPECT_NE(RandomInstance(42, 9, options), RandomInstance(43, 9, options));
  }
}

TEST(RandomInstanceTest, GraphicSatisfiesAxioms) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    RandomInstanceOptions options;
    options.matroid = MatroidKind::kGraphic;
    options.rank = 4;
    const Instance instance = RandomInstance(seed, 8, options);
    const Oracles o = Build(instance);
    EXPECT_TRUE(testkit::ValidateMatroidAxioms(o.m, 8).ok());
    EXPECT_TRUE(testkit::ValidateMonotoneSubmodular(o.f, 8).ok());
  }
}

TEST(RandomInstanceTest, NTwoClampsRank) {
  RandomInstanceOptions options;
  options.rank = 5;
  for (auto kind : {MatroidKind::kUniform, MatroidKind::kPartition,
                    MatroidKind::kGraphic}) {
    options.matroid = kind;
    const Instance instance = RandomInstance(1, 2, options);
    EXPECT_LE(InstanceRank(instance), 2);
    EXPECT_NO_THROW(Validate(instance));
  }
}

TEST(RandomInstanceTest, InfeasibleParameters) {
  EXPECT_THROW(RandomInstance(0, 1, {}), std::invalid_argument);
  RandomInstanceOptions options;
  options.rank = 0;
  EXPECT_THROW(RandomInstance(0, 5, options), std::invalid_argument);
}

TEST(RandomInstanceTest, WeightsInRange) {
  RandomInstanceOptions options;
  options.function = FunctionKind::kModular;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto spec = std::get<ModularSpec>(RandomInstance(seed, 10, options).function);
    for (double w : spec.weights) {
      EXPECT_GE(w, 1);
      EXPECT_LE(w, 10);
      EXPECT_EQ(w, std::floor(w));
    }
  }
}

}  // namespace
}  // namespace submod
