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

#include "submod/element_set.h"

#include <gtest/gtest.h>

namespace submod {
namespace {

TEST(ElementSetTest, CanonicalOrder) {
  const ElementSet s = ElementSet::FromUnsorted({4, 1, 4, 0});
  EXPECT_EQ(s, (ElementSet{0, 1, 4}));
  EXPECT_EQ(s.size(), 3u);
  EXPECT_EQ(s.ToString(), "{0,1,4}");
}

TEST(ElementSetTest, SetAlgebra) {
  const ElementSet a{0, 2, 3};
  const ElementSet b{2, 5};
  EXPECT_EQ(a.Union(b), (ElementSet{0, 2, 3, 5}));
  EXPECT_EQ(a.Intersection(b), (ElementSet{2}));
  EXPECT_EQ(a.Difference(b), (ElementSet{0, 3}));
  EXPECT_TRUE(ElementSet{2}.IsSubsetOf(b));
  EXPECT_FALSE(a.IsDisjointFrom(b));
  EXPECT_TRUE(ElementSet{0}.IsDisjointFrom(b));
  EXPECT_EQ(a.With(1), (ElementSet{0, 1, 2, 3}));
  EXPECT_EQ(a.With(2), a);
  EXPECT_EQ(a.Without(2), (ElementSet{0, 3}));
  EXPECT_EQ(a.Without(7), a);
  EXPECT_EQ(a.IndexOf(3), 2);
  EXPECT_EQ(a.IndexOf(1), -1);
  EXPECT_EQ(a.Bound(), 4);
}

TEST(ElementSetTest, MaskRoundTrip) {
  for (std::uint64_t mask : {0ull, 1ull, 0b1011ull, 0xFFull}) {
    EXPECT_EQ(ToMask(FromMask(mask)), mask);
  }
  EXPECT_EQ(ElementSet::Range(3), (ElementSet{0, 1, 2}));
}

TEST(ElementSetTest, LexicographicComparison) {
  EXPECT_LT((ElementSet{0, 2}), (ElementSet{1}));
  EXPECT_LT((ElementSet{0}), (ElementSet{0, 1}));
}

}  // namespace
}  // namespace submod
