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


#include "trilsd/ensembles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "trilsd/patterns.hpp"

namespace trilsd {
namespace {

constexpr std::uint64_t kSeed = 77;

double mean(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double variance(const std::vector<double>& v) {
  const double m = mean(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return s / static_cast<double>(v.size() - 1);
}

TEST(SampleInputs, EmptyAndDeterministic) {
  EXPECT_TRUE(sample_inputs(InputDistribution::StandardGaussian, 0, kSeed).empty());
  EXPECT_EQ(sample_inputs(InputDistribution::UniformScaled, 50, kSeed),
            sample_inputs(InputDistribution::UniformScaled, 50, kSeed));
  EXPECT_EQ(input_value(InputDistribution::StandardGaussian, kSeed, 17),
            sample_inputs(InputDistribution::StandardGaussian, 30, kSeed)[17]);
}

TEST(SampleInputs, RademacherSupport) {
  for (double x : sample_inputs(InputDistribution::Rademacher, 1000, kSeed)) {
    EXPECT_TRUE(x == 1.0 || x == -1.0);
  }
}

TEST(SampleInputs, UniformSupport) {
  for (double x : sample_inputs(InputDistribution::UniformScaled, 1000, kSeed)) {
    EXPECT_LE(std::abs(x), std::sqrt(3.0));
  }
}

class InputMoments : public ::testing::TestWithParam<InputDistribution> {};

TEST_P(InputMoments, MeanZeroVarianceOne) {
  const auto v = sample_inputs(GetParam(), 1000000, kSeed);
  EXPECT_LT(std::abs(mean(v)), 4e-3);
  EXPECT_LT(std::abs(variance(v) - 1.0), 1e-2);
}

INSTANTIATE_TEST_SUITE_P(AllLaws, InputMoments,
                         ::testing::Values(InputDistribution::StandardGaussian,
                                           InputDistribution::Rademacher,
                                           InputDistribution::UniformScaled));

TEST(Names, RoundTrip) {
  for (auto d : {InputDistribution::StandardGaussian, InputDistribution::Rademacher,
                 InputDistribution::UniformScaled}) {
    EXPECT_EQ(parse_distribution(to_string(d)), d);
  }
  for (auto r : {Region::Full, Region::UpperAnti, Region::LowerAnti, Region::StrictLowerAnti}) {
    EXPECT_EQ(parse_region(to_string(r)), r);
  }
  EXPECT_THROW(parse_distribution("cauchy"), std::invalid_argument);
}

TEST(BuildTriangular, WignerCorners) {
  const std::size_t n = 9;
  const auto d = build_triangular(PatternKind::Wigner, n, InputDistribution::StandardGaussian, kSeed);
  EXPECT_NE(d.entries(0, n - 1), 0.0);
  EXPECT_EQ(d.entries(1, n - 1), 0.0);
  EXPECT_NE(d.entries(0, 0), 0.0);
  EXPECT_NE(d.entries(1, 1), 0.0);
}

TEST(BuildTriangular, HankelRepeatsAntiDiagonal) {
  const std::size_t n = 9;
  const auto d = build_triangular(PatternKind::Hankel, n, InputDistribution::StandardGaussian, kSeed);
  EXPECT_EQ(d.entries(0, n - 1), d.entries(1, n - 2));
}

TEST(BuildTriangular, OneByOne) {
  for (auto p : {PatternKind::Wigner, PatternKind::Hankel, PatternKind::Toeplitz,
                 PatternKind::SymmetricCirculant}) {
    const auto d = build_triangular(p, 1, InputDistribution::Rademacher, kSeed);
    ASSERT_EQ(d.entries.rows(), 1);
    EXPECT_EQ(std::abs(d.entries(0, 0)), 1.0);
  }
}

TEST(BuildTriangular, StructuralInvariants) {
  const std::size_t n = 13;
  for (auto p : {PatternKind::Wigner, PatternKind::Hankel, PatternKind::Toeplitz,
                 PatternKind::SymmetricCirculant}) {
    const auto d = build_triangular(p, n, InputDistribution::StandardGaussian, kSeed);
    std::map<LinkValue, double> by_link;
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        const double x = d.entries(static_cast<Eigen::Index>(i - 1), static_cast<Eigen::Index>(j - 1));
        EXPECT_EQ(x, d.entries(static_cast<Eigen::Index>(j - 1), static_cast<Eigen::Index>(i - 1)));
        if (i + j > n + 1) {
          EXPECT_EQ(x, 0.0);
          continue;
        }
        const auto [it, fresh] = by_link.emplace(link_value(p, i, j, n), x);
        if (!fresh) EXPECT_EQ(it->second, x) << to_string(p) << " " << i << "," << j;
      }
    }
  }
}

TEST(BuildTriangular, BitIdenticalRepeats) {
  const auto a = build_triangular(PatternKind::Toeplitz, 40, InputDistribution::UniformScaled, 5);
  const auto b = build_triangular(PatternKind::Toeplitz, 40, InputDistribution::UniformScaled, 5);
  EXPECT_EQ(a.entries, b.entries);
  const auto c = build_triangular(PatternKind::Toeplitz, 40, InputDistribution::UniformScaled, 6);
  EXPECT_NE(a.entries, c.entries);
}

TEST(BuildTriangular, WignerConsumesOneVariablePerPair) {
  for (std::size_t n : {1u, 2u, 7u, 20u}) {
    std::size_t pairs = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i; j <= n; ++j) pairs += (i + j <= n + 1);
    }
    EXPECT_EQ(distinct_link_count(PatternKind::Wigner, Region::UpperAnti, n), pairs);
  }
}

TEST(BuildLowerAnti, Corners) {
  const std::size_t n = 6;
  const auto d = build_lower_anti(n, InputDistribution::StandardGaussian, kSeed);
  EXPECT_EQ(d.entries(0, 0), 0.0);
  EXPECT_NE(d.entries(n - 1, n - 1), 0.0);
  const auto one = build_lower_anti(1, InputDistribution::StandardGaussian, kSeed);
  EXPECT_NE(one.entries(0, 0), 0.0);
}

TEST(BuildAsymUpper, ShapeAndScale) {
  const auto d = build_asym_upper(5, kSeed);
  EXPECT_EQ(d.entries(1, 0), std::complex<double>(0.0, 0.0));
  EXPECT_NE(d.entries(0, 1), std::complex<double>(0.0, 0.0));
  const auto one = build_asym_upper(1, kSeed);
  EXPECT_NE(one.entries(0, 0), std::complex<double>(0.0, 0.0));
}

TEST(BuildAsymUpper, EntryVarianceIsOneOverN) {
  const std::size_t n = 4;
  double s = 0.0;
  const int draws = 100000;
  for (int r = 0; r < draws; ++r) s += std::norm(build_asym_upper(n, static_cast<std::uint64_t>(r)).entries(0, 0));
  const double v = s / draws;
  EXPECT_NEAR(v, 1.0 / n, 0.05 / n);
}

TEST(FlipConjugate, Properties) {
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(5, 5);
  EXPECT_EQ(flip_conjugate(id), id);
  const auto d = build_triangular(PatternKind::Wigner, 8, InputDistribution::StandardGaussian, kSeed);
  EXPECT_EQ(flip_conjugate(flip_conjugate(d.entries)), d.entries);
  EXPECT_THROW(flip_conjugate(Eigen::MatrixXd(2, 3)), std::invalid_argument);
}

TEST(FlipConjugate, UpperBecomesLowerSparsity) {
  const std::size_t n = 11;
  const auto u = build_triangular(PatternKind::Wigner, n, InputDistribution::StandardGaussian, kSeed);
  const Eigen::MatrixXd f = flip_conjugate(u.entries);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      const double x = f(static_cast<Eigen::Index>(i - 1), static_cast<Eigen::Index>(j - 1));
      if (i + j < n + 1) EXPECT_EQ(x, 0.0);
      else EXPECT_NE(x, 0.0);
    }
  }
}

TEST(SharedWiring, PartsReassembleTheFullDraw) {
  const std::size_t n = 10;
  const auto full = build_patterned(PatternKind::Wigner, Region::Full, n, InputDistribution::StandardGaussian, kSeed);
  const auto up = build_patterned(PatternKind::Wigner, Region::UpperAnti, n, InputDistribution::StandardGaussian, kSeed);
  const auto lo = build_patterned(PatternKind::Wigner, Region::StrictLowerAnti, n, InputDistribution::StandardGaussian, kSeed);
  EXPECT_EQ(up.entries + lo.entries, full.entries);
}

}  // namespace
}  // namespace trilsd
