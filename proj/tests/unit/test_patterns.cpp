// Copyright 2026 The trilsd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "trilsd/patterns.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

namespace trilsd {
namespace {

constexpr PatternKind kAll[] = {PatternKind::Wigner, PatternKind::Hankel,
                                PatternKind::Toeplitz, PatternKind::SymmetricCirculant};

TEST(LinkValue, DisplayedEntries) {
  EXPECT_EQ(link_value(PatternKind::Hankel, 1, 1, 5), (LinkValue{2, 0}));
  EXPECT_EQ(link_value(PatternKind::Toeplitz, 3, 3, 5), (LinkValue{0, 0}));
  for (std::size_t n : {2u, 5u, 9u}) {
    EXPECT_EQ(link_value(PatternKind::SymmetricCirculant, 1, n, n), (LinkValue{1, 0}));
  }
  EXPECT_EQ(link_value(PatternKind::Wigner, 4, 2, 5), (LinkValue{2, 4}));
  EXPECT_EQ(link_value(PatternKind::SymmetricCirculant, 1, 4, 8), (LinkValue{3, 0}));
  EXPECT_EQ(link_value(PatternKind::SymmetricCirculant, 1, 7, 8), (LinkValue{2, 0}));
}

TEST(LinkValue, OutOfRangeThrows) {
  EXPECT_THROW(link_value(PatternKind::Wigner, 0, 1, 3), std::out_of_range);
  EXPECT_THROW(link_value(PatternKind::Hankel, 1, 4, 3), std::out_of_range);
}

TEST(LinkValue, SymmetricExhaustive) {
  for (PatternKind p : kAll) {
    for (std::size_t n = 1; n <= 64; ++n) {
      for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
          ASSERT_EQ(link_value(p, i, j, n), link_value(p, j, i, n));
        }
      }
    }
  }
}

TEST(LinkValue, IndependentOfSizeExceptCirculant) {
  for (PatternKind p : {PatternKind::Wigner, PatternKind::Hankel, PatternKind::Toeplitz}) {
    for (std::size_t i = 1; i <= 10; ++i) {
      for (std::size_t j = 1; j <= 10; ++j) {
        EXPECT_EQ(link_value(p, i, j, 10), link_value(p, i, j, 40));
      }
    }
  }
}

TEST(LinkIndex, WignerPairsAreDistinct) {
  EXPECT_EQ(link_index(PatternKind::Wigner, {1, 1}), 1u);
  EXPECT_EQ(link_index(PatternKind::Wigner, {1, 2}), 2u);
  EXPECT_EQ(link_index(PatternKind::Wigner, {2, 2}), 3u);
  EXPECT_EQ(link_index(PatternKind::Hankel, {7, 0}), 7u);
}

TEST(InTriangle, Boundary) {
  const std::size_t n = 7;
  EXPECT_TRUE(in_triangle(1, n, n));
  EXPECT_FALSE(in_triangle(2, n, n));
  EXPECT_TRUE(in_triangle(1, 1, 1));
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) EXPECT_EQ(in_triangle(i, j, n), in_triangle(j, i, n));
  }
}

TEST(DeltaBound, Values) {
  EXPECT_EQ(delta_bound(PatternKind::Hankel, 50), 1u);
  EXPECT_EQ(delta_bound(PatternKind::Toeplitz, 50), 2u);
  EXPECT_EQ(delta_bound(PatternKind::Wigner, 50), 1u);
}

TEST(DeltaBound, ConstantInSize) {
  for (PatternKind p : kAll) {
    const std::size_t d = delta_bound(p, 16);
    for (std::size_t n : {32u, 64u, 128u}) EXPECT_EQ(delta_bound(p, n), d) << to_string(p);
  }
}

TEST(PropertyP, BoundedAndConstant) {
  EXPECT_LE(property_p_bound(PatternKind::Wigner, 30), 2u);
  EXPECT_LE(property_p_bound(PatternKind::Hankel, 30), 2u);
  for (PatternKind p : kAll) {
    const std::size_t m = property_p_bound(p, 16);
    for (std::size_t n : {32u, 64u}) EXPECT_EQ(property_p_bound(p, n), m) << to_string(p);
  }
  for (PatternKind p : {PatternKind::Wigner, PatternKind::Hankel}) {
    const std::size_t m = property_p_bound(p, 10);
    EXPECT_EQ(property_p_bound(p, 20), m);
    EXPECT_EQ(property_p_bound(p, 30), m);
  }
}

TEST(PatternNames, RoundTripAndAlias) {
  for (PatternKind p : kAll) EXPECT_EQ(parse_pattern(to_string(p)), p);
  EXPECT_EQ(parse_pattern("revcirc"), PatternKind::Hankel);
  EXPECT_EQ(kReverseCirculant, PatternKind::Hankel);
  EXPECT_THROW(parse_pattern("band"), std::invalid_argument);
}

}  // namespace
}  // namespace trilsd
