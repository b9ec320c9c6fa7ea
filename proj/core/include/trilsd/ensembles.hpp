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

// Seeded random matrix ensembles.
//
// Input variable t of a draw is input_value(dist, seed, t): the same link
// value always receives the same number regardless of the order in which a
// matrix is filled. Symmetric ensembles carry variance-1 entries and are
// scaled by 1/sqrt(n) downstream; the asymmetric complex Gaussian carries
// variance 1/n per entry and is used unscaled.

#ifndef TRILSD_ENSEMBLES_HPP_
#define TRILSD_ENSEMBLES_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "trilsd/patterns.hpp"

namespace trilsd {

/// Mean-0, variance-1 laws. UniformScaled is Uniform(-sqrt 3, sqrt 3).
enum class InputDistribution { StandardGaussian, Rademacher, UniformScaled };

std::string_view to_string(InputDistribution dist);
/// Accepts gaussian, rademacher, uniform.
InputDistribution parse_distribution(std::string_view name);

/// Which part of the patterned matrix is populated.
enum class Region {
  Full,              ///< every (i, j)
  UpperAnti,         ///< i + j <= n + 1 (the triangular X^u)
  LowerAnti,         ///< i + j >= n + 1 (W^l, anti-diagonal included)
  StrictLowerAnti,   ///< i + j >  n + 1
};

std::string_view to_string(Region region);
Region parse_region(std::string_view name);

/// True iff 1-based (i, j) belongs to `region` of an n x n matrix.
constexpr bool in_region(Region region, std::size_t i, std::size_t j,
                         std::size_t n) {
  switch (region) {
    case Region::Full:
      return true;
    case Region::UpperAnti:
      return i + j <= n + 1;
    case Region::LowerAnti:
      return i + j >= n + 1;
    case Region::StrictLowerAnti:
      return i + j > n + 1;
  }
  return false;
}

/// The t-th input variable of the sequence keyed by `seed`.
double input_value(InputDistribution dist, std::uint64_t seed, std::uint64_t t);

/// First `count` input variables (t = 0 .. count-1).
std::vector<double> sample_inputs(InputDistribution dist, std::size_t count,
                                  std::uint64_t seed);

struct MatrixDraw {
  PatternKind pattern = PatternKind::Wigner;
  Region region = Region::UpperAnti;
  std::size_t n = 0;
  InputDistribution dist = InputDistribution::StandardGaussian;
  std::uint64_t seed = 0;
  Eigen::MatrixXd entries;  ///< unscaled, variance-1 entries
};

/// Upper-triangular complex Gaussian T_n whose entries have E|t|^2 = 1/n.
struct ComplexMatrixDraw {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  Eigen::MatrixXcd entries;
};

/// General symmetric patterned draw restricted to `region`.
MatrixDraw build_patterned(PatternKind pattern, Region region, std::size_t n,
                           InputDistribution dist, std::uint64_t seed);

/// X^u: entry x_{L(i,j)} when i + j <= n + 1, zero otherwise.
MatrixDraw build_triangular(PatternKind pattern, std::size_t n,
                            InputDistribution dist, std::uint64_t seed);

/// W^l: Wigner entries on and below the anti-diagonal.
MatrixDraw build_lower_anti(std::size_t n, InputDistribution dist,
                            std::uint64_t seed);

MatrixDraw build_full(PatternKind pattern, std::size_t n,
                      InputDistribution dist, std::uint64_t seed);

ComplexMatrixDraw build_asym_upper(std::size_t n, std::uint64_t seed);

/// P A P^T with P the anti-identity, i.e. (i, j) -> (n+1-i, n+1-j).
/// Throws std::invalid_argument for a non-square input.
template <typename Derived>
typename Derived::PlainObject flip_conjugate(const Eigen::MatrixBase<Derived>& a) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("flip_conjugate: matrix is not square");
  }
  return a.reverse();
}

/// Number of distinct link values inside `region`, i.e. the number of input
/// variables a draw consumes.
std::size_t distinct_link_count(PatternKind pattern, Region region,
                                std::size_t n);

}  // namespace trilsd

#endif  // TRILSD_ENSEMBLES_HPP_
