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


#ifndef TRILSD_VOLUME_HPP_
#define TRILSD_VOLUME_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "trilsd/patterns.hpp"
#include "trilsd/polynomial.hpp"
#include "trilsd/words.hpp"

namespace trilsd {

struct PuValue {
  enum class Mode { Exact, Estimated };

  Mode mode = Mode::Exact;
  Rational exact = 0;  ///< meaningful when mode == Exact
  double estimate = 0.0;
  double error_bar = 0.0;
  std::vector<std::size_t> n_list;  ///< sizes (or grid resolutions) used
  std::vector<double> raw;          ///< normalized value at each size

  static PuValue exact_value(const Rational& q);

  /// The exact value as a double, or the estimate.
  double value() const;
  bool is_exact() const { return mode == Mode::Exact; }
};

/// Q_w by structural recursion on w = a w1 a w2:
///   Q_w(x) = (int_0^{1-x} Q_{w1}) * Q_{w2}(x),  Q_empty = 1.
/// Throws std::domain_error for a non-Catalan word.
RationalPolynomial qw_polynomial(const Word& w);

/// int_0^1 Q_w. Throws std::domain_error for a non-Catalan word.
Rational pu_exact_wigner(const Word& w);

/// Sum of Q_w over Catalan words of length 2n. Requires n <= 8.
RationalPolynomial g_polynomial(std::size_t n);

/// (1-x)(n+1-x)^{n-1}/n!, and 1 for n = 0.
RationalPolynomial g_closed_form(std::size_t n);

struct CountLimits {
  std::size_t max_half_length = 4;
  /// Upper bound on n^{k+1} * delta^k before the count is refused.
  double max_cost = 1e12;
};

/// Exact number of circuits pi: {0..2k} -> {1..n}, pi(0) = pi(2k), whose
/// link values match according to w. With `triangular`, every step also
/// satisfies pi(i-1) + pi(i) <= n + 1.
/// Throws ResourceError beyond the limits.
std::uint64_t count_circuits(PatternKind pattern, const Word& w, std::size_t n,
                             bool triangular, const CountLimits& limits = {},
                             std::size_t workers = 0);

/// count_circuits / n^{k+1} over increasing sizes, Richardson-extrapolated
/// under O(1/n) error. The error bar is heuristic.
PuValue pu_estimate(PatternKind pattern, const Word& w,
                    std::span<const std::size_t> n_list,
                    const CountLimits& limits = {}, std::size_t workers = 0);

struct HankelForms {
  Word word;
  std::vector<std::size_t> generating;  ///< S, ascending
  /// forms[j][l]: coefficient of the l-th generating vertex in L_j, for
  /// every position j = 0..2k. Generating positions carry unit vectors.
  std::vector<std::vector<std::int64_t>> forms;
  bool closure_identity = false;

  bool is_generating(std::size_t j) const;
};

/// Left-to-right elimination v_j = v_{i-1} + v_i - v_{j-1} at each second
/// occurrence j with partner i. Throws std::invalid_argument unless w is
/// pair-matched.
HankelForms hankel_forms(const Word& w);

/// Number of u in {1..m}^{k+1} with 1 <= L_j(u) <= m off S and, when
/// triangular, L_{i-1}(u) + L_i(u) <= m + 1 for i in S \ {0}. The last
/// generating coordinate is counted as an interval, so the cost is O(m^k).
std::uint64_t grid_count_hankel(const HankelForms& forms, std::size_t m,
                                bool triangular, std::size_t workers = 0);

/// Grid Riemann sum at resolutions m/4, m/2, m with Richardson
/// extrapolation. m must be a positive multiple of 4. A word whose closure
/// identity fails returns Exact 0.
PuValue pu_grid_hankel(const Word& w, std::size_t m, bool triangular = true,
                       std::size_t workers = 0);

struct ClauseResult {
  std::string id;         ///< "a" .. "e"
  std::string statement;  ///< human-readable inequality
  bool passed = true;
  std::size_t checked = 0;
  std::size_t equalities = 0;
  std::vector<std::string> counterexamples;
};

struct AppendixReport {
  std::size_t k_max = 0;
  std::vector<ClauseResult> clauses;

  bool passed() const;
};

/// Checks the exact Wigner inequalities over all Catalan words of length
/// up to 2 k_max (k_max <= 6):
///   (a) p(a1a1...akak) = 1/(k+1)
///   (b) p(w) <= 1/(k+1)
///   (c) p(a w1 a w2) <= p(a a w1 w2)
///   (d) p(abba w1 w2) >= p(ab w1 ba w2)
///   (e) p(rotate(w, r)) = p(w)
/// Empty w1, w2 are included.
AppendixReport verify_appendix(std::size_t k_max);

}  // namespace trilsd

#endif  // TRILSD_VOLUME_HPP_
