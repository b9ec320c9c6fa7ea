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

// Link functions of the four symmetric patterns and the anti-triangular
// region they are restricted to.
//
// A patterned matrix has entry x_{L(i,j)} at (i,j); positions with equal link
// values share one input variable. Indices are 1-based throughout this module
// to match the usual matrix notation.

#ifndef TRILSD_PATTERNS_HPP_
#define TRILSD_PATTERNS_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace trilsd {

enum class PatternKind { Wigner, Hankel, Toeplitz, SymmetricCirculant };

/// The triangular Reverse Circulant coincides with the triangular Hankel.
inline constexpr PatternKind kReverseCirculant = PatternKind::Hankel;

/// Value of a link function. Wigner links are the ordered pair
/// (min(i,j), max(i,j)); the scalar patterns store their value in `first` and
/// keep `second` at zero, so equality of link values is plain value equality.
struct LinkValue {
  std::int64_t first = 0;
  std::int64_t second = 0;

  friend constexpr auto operator<=>(const LinkValue&, const LinkValue&) = default;
};

/// Evaluates L(i,j) for an n x n matrix. Throws std::out_of_range unless
/// 1 <= i, j <= n.
LinkValue link_value(PatternKind pattern, std::size_t i, std::size_t j,
                     std::size_t n);

/// Unchecked variant for hot loops; callers guarantee the index range.
constexpr LinkValue link_value_unchecked(PatternKind pattern, std::int64_t i,
                                         std::int64_t j, std::int64_t n) {
  const std::int64_t d = i > j ? i - j : j - i;
  switch (pattern) {
    case PatternKind::Wigner:
      return i <= j ? LinkValue{i, j} : LinkValue{j, i};
    case PatternKind::Hankel:
      return {i + j, 0};
    case PatternKind::Toeplitz:
      return {d, 0};
    case PatternKind::SymmetricCirculant:
      return {d < n - d ? d : n - d, 0};
  }
  return {};
}

/// Flat, n-independent index of a link value, used to address input draws.
/// Wigner pairs (a,b), a <= b, map to b(b-1)/2 + a; scalars map to themselves.
std::uint64_t link_index(PatternKind pattern, LinkValue value);

/// True iff (i,j) lies on or above the anti-diagonal, i.e. i + j <= n + 1.
bool in_triangle(std::size_t i, std::size_t j, std::size_t n);

/// Largest number of columns l (with k + l <= n + 1) in a single row k that
/// share one link value, maximised over rows and realised link values.
std::size_t delta_bound(PatternKind pattern, std::size_t n);

/// max over i != j of #{k : k+i <= n+1, k+j <= n+1, L(k,i) = L(k,j)}.
std::size_t property_p_bound(PatternKind pattern, std::size_t n);

std::string_view to_string(PatternKind pattern);

/// Accepts wigner, hankel, toeplitz, symcirc and the alias revcirc.
/// Throws std::invalid_argument on anything else.
PatternKind parse_pattern(std::string_view name);

}  // namespace trilsd

#endif  // TRILSD_PATTERNS_HPP_
