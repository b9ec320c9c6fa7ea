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

#ifndef TRILSD_POLYNOMIAL_HPP_
#define TRILSD_POLYNOMIAL_HPP_

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace trilsd {

using Rational = mpq_class;

/// "p/q" (or "p" when q = 1).
std::string to_string(const Rational& q);
/// Parses "p/q" or "p"; throws std::invalid_argument.
Rational parse_rational(const std::string& text);

/// Exact univariate polynomial with rational coefficients in ascending degree.
/// The coefficient vector never ends in a zero, so the zero polynomial has no
/// coefficients at all.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coefficients);
  RationalPolynomial(std::initializer_list<Rational> coefficients);

  static RationalPolynomial constant(const Rational& c);
  /// The polynomial x.
  static RationalPolynomial identity();

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Coefficient of x^i (zero past the degree).
  Rational coefficient(std::size_t i) const;
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  Rational operator()(const Rational& x) const;
  double evaluate(double x) const;

  RationalPolynomial& operator+=(const RationalPolynomial& rhs);
  RationalPolynomial& operator-=(const RationalPolynomial& rhs);
  RationalPolynomial& operator*=(const RationalPolynomial& rhs);
  RationalPolynomial& operator*=(const Rational& c);

  friend RationalPolynomial operator+(RationalPolynomial a,
                                      const RationalPolynomial& b) {
    return a += b;
  }
  friend RationalPolynomial operator-(RationalPolynomial a,
                                      const RationalPolynomial& b) {
    return a -= b;
  }
  friend RationalPolynomial operator*(RationalPolynomial a,
                                      const RationalPolynomial& b) {
    return a *= b;
  }
  friend RationalPolynomial operator*(RationalPolynomial a, const Rational& c) {
    return a *= c;
  }
  friend bool operator==(const RationalPolynomial& a,
                         const RationalPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  RationalPolynomial pow(std::size_t e) const;

  /// Antiderivative F with F(0) = 0.
  RationalPolynomial antiderivative() const;

  /// Exact definite integral over [lo, hi].
  Rational integrate(const Rational& lo, const Rational& hi) const;

  /// p(a + b x).
  RationalPolynomial compose_affine(const Rational& a, const Rational& b) const;

  /// e.g. "1 - 1/2*x^2".
  std::string str() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

}  // namespace trilsd

#endif  // TRILSD_POLYNOMIAL_HPP_
