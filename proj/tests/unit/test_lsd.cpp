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


#include "trilsd/lsd.hpp"

#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/lambert_w.hpp>
#include <cmath>
#include <numbers>

namespace trilsd {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;

Rational q(long p, long r = 1) {
  Rational out{mpz_class(p), mpz_class(r)};
  out.canonicalize();
  return out;
}

TEST(ClosedMoment, Values) {
  EXPECT_EQ(closed_moment(1), q(1, 2));
  EXPECT_EQ(closed_moment(2), q(2, 3));
  EXPECT_EQ(closed_moment(3), q(9, 8));
  EXPECT_EQ(closed_moment(4), q(32, 15));
}

TEST(ClosedMoment, EqualsIntegralOfG) {
  for (std::size_t k = 1; k <= 8; ++k) EXPECT_EQ(closed_moment(k), g_polynomial(k).integrate(0, 1)) << k;
}

TEST(ClosedMoment, GrowthBoundedBySqrtE) {
  for (std::size_t k = 1; k <= 40; ++k) {
    EXPECT_LE(std::pow(closed_moment(k).get_d(), 1.0 / (2.0 * static_cast<double>(k))), std::sqrt(kE));
  }
}

TEST(Beta, ExactWigner) {
  EXPECT_EQ(beta_2k(PatternKind::Wigner, 3, MomentMethod::Exact).exact, q(9, 8));
  EXPECT_THROW(beta_2k(PatternKind::Hankel, 2, MomentMethod::Exact), std::invalid_argument);
  EXPECT_THROW(beta_2k(PatternKind::Wigner, 2, MomentMethod::Grid), std::invalid_argument);
}

TEST(Beta, HankelGrid) {
  const PuValue b1 = beta_2k(PatternKind::Hankel, 1, MomentMethod::Grid);
  EXPECT_NEAR(b1.estimate, 0.5, 0.005);
  const PuValue b2 = beta_2k(PatternKind::Hankel, 2, MomentMethod::Grid);
  EXPECT_NEAR(b2.estimate, 2.0 / 3.0, 0.02);
}

TEST(Beta, SecondMomentIsOneHalfForEveryPattern) {
  for (PatternKind p : {PatternKind::Wigner, PatternKind::Hankel, PatternKind::Toeplitz,
                        PatternKind::SymmetricCirculant}) {
    const PuValue b = beta_2k(p, 1, MomentMethod::Count);
    EXPECT_NEAR(b.estimate, 0.5, std::max(b.error_bar, 1e-6)) << to_string(p);
    EXPECT_GE(b.estimate, 0.0);
  }
}

TEST(MomentTable, WignerExact) {
  const MomentTable t = moment_table(PatternKind::Wigner, 4, MomentMethod::Exact);
  ASSERT_EQ(t.entries.size(), 4u);
  const Rational expected[] = {q(1, 2), q(2, 3), q(9, 8), q(32, 15)};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(t.entries[i].beta.exact, expected[i]);
}

TEST(Psi, ParametricExamples) {
  const DensityPoint mid = psi_parametric(kPi / 2);
  EXPECT_NEAR(mid.x, 2.0 / kPi, 1e-12);
  EXPECT_NEAR(mid.psi, 1.0 / kPi, 1e-12);
  const DensityPoint near_zero = psi_parametric(1e-6);
  EXPECT_NEAR(near_zero.x, kE, 1e-9);
  EXPECT_LT(near_zero.psi, 1e-5);
  const DensityPoint near_pi = psi_parametric(kPi - 1e-3);
  EXPECT_LT(near_pi.x, 1e-100);
  EXPECT_GT(near_pi.psi, 1e100);
  EXPECT_THROW(psi_parametric(0.0), std::domain_error);
  EXPECT_THROW(psi_parametric(kPi), std::domain_error);
}

TEST(Psi, MonotoneParametrization) { EXPECT_TRUE(check_parametrization_monotone(10000)); }

TEST(Psi, InversionExamples) {
  EXPECT_NEAR(psi_at(2.0 / kPi), 1.0 / kPi, 1e-9);
  EXPECT_LT(psi_at(kE - 1e-9), 1e-3);
  EXPECT_THROW(psi_at(0.0), std::domain_error);
  EXPECT_THROW(psi_at(kE), std::domain_error);
}

TEST(Psi, RoundTripAgainstParametricCurve) {
  for (double v : {0.1, 0.7, 1.3, 2.0, 2.6, 3.0}) {
    const DensityPoint d = psi_parametric(v);
    EXPECT_NEAR(psi_at(d.x), d.psi, 1e-8 * std::max(1.0, d.psi));
  }
}

TEST(Psi, MassInXDomainMatchesParametricMass) {
  // Independent route: x-domain quadrature with the inverted density,
  // away from the integrable singularity at 0.
  using boost::math::quadrature::gauss_kronrod;
  const double lo = 0.5;
  const double x_domain = gauss_kronrod<double, 31>::integrate([](double x) { return psi_at(x); }, lo, kE, 10, 1e-10);
  const double v_lo = [&] {
    double a = 0.0, b = kPi;
    while (b - a > 1e-13) {
      const double m = 0.5 * (a + b);
      (x_of_v(m) > lo ? a : b) = m;
    }
    return 0.5 * (a + b);
  }();
  const double v_domain = gauss_kronrod<double, 31>::integrate(
      [](double v) {
        const double s = std::sin(v) / v;
        return (1.0 + s * s - std::sin(2.0 * v) / v) / kPi;
      },
      0.0, v_lo, 10, 1e-12);
  EXPECT_NEAR(x_domain, v_domain, 1e-7);
}

TEST(DensityMoments, AgreeWithClosedMoments) {
  EXPECT_NEAR(density_moment(0), 1.0, 1e-8);
  for (std::size_t k = 1; k <= 4; ++k) EXPECT_NEAR(density_moment(k), closed_moment(k).get_d(), 1e-6) << k;
}

TEST(WignerLsd, DensityProperties) {
  for (double x : {0.1, 0.5, 1.0, 1.6}) EXPECT_DOUBLE_EQ(wigner_lsd_density(x), wigner_lsd_density(-x));
  EXPECT_EQ(wigner_lsd_density(std::sqrt(kE)), 0.0);
  EXPECT_EQ(wigner_lsd_density(3.0), 0.0);
  EXPECT_THROW(wigner_lsd_density(0.0), std::domain_error);
  EXPECT_NEAR(wigner_lsd_moment(0), 1.0, 1e-8);
  EXPECT_NEAR(wigner_lsd_moment(2), 0.5, 1e-6);
  EXPECT_LT(std::abs(wigner_lsd_moment(1)), 1e-8);
  EXPECT_NEAR(wigner_lsd_mass(-std::sqrt(kE), std::sqrt(kE)), 1.0, 1e-8);
  EXPECT_NEAR(wigner_lsd_mass(-10.0, 0.0), 0.5, 1e-8);
}

TEST(WignerLsd, MomentsMatchDegreeOfTheCurve) {
  // The x-mirror identity: even moment 2k of |x| psi(x^2) is the k-th psi moment.
  for (std::size_t k = 1; k <= 3; ++k) EXPECT_NEAR(wigner_lsd_moment(2 * k), density_moment(k), 1e-12);
}

TEST(Lambert, Examples) {
  EXPECT_EQ(lambert_w0(0.0), 0.0);
  EXPECT_NEAR(lambert_w0(kE), 1.0, 1e-14);
  EXPECT_NEAR(lambert_w0(1.0), 0.5671432904, 1e-10);
  EXPECT_EQ(lambert_w0(-1.0 / kE), -1.0);
  EXPECT_THROW(lambert_w0(-0.5), std::domain_error);
}

TEST(Lambert, AgreesWithBoost) {
  for (double y : {-0.3678, -0.36, -0.3, -0.2, -0.05, 1e-8, 0.3, 2.0, 10.0, 1e3, 1e8}) {
    const double w = lambert_w0(y);
    EXPECT_NEAR(w, boost::math::lambert_w0(y), 1e-12 * std::max(1.0, std::abs(w))) << y;
    EXPECT_LE(std::abs(w * std::exp(w) - y), 1e-14 * std::max(1.0, std::abs(y)) * 4) << y;
  }
}

TEST(LambertSeries, Examples) {
  EXPECT_LE(lambert_series_check(5.0, 40).gap, 1e-8);
  EXPECT_LE(lambert_series_check(-5.0, 40).gap, 1e-8);
  const LambertCheck two = lambert_series_check(10.0, 2);
  EXPECT_NEAR(two.rhs, 0.105, 1e-12);
  EXPECT_LT(two.gap, 0.01);
  EXPECT_THROW(lambert_series_check(2.0, 10), std::domain_error);
  EXPECT_THROW(lambert_series_check(5.0, 0), std::invalid_argument);
}

TEST(SupportBound, HankelExamples) {
  const SupportBoundReport r = hankel_support_bound(2, 160);
  ASSERT_EQ(r.words.size(), 3u);  // aa, aabb, abba
  for (const auto& e : r.words) {
    EXPECT_NEAR(e.full.estimate, 1.0, 1e-12) << e.word.str();
    EXPECT_TRUE(e.passed) << e.word.str();
  }
  EXPECT_NEAR(r.words[0].triangular.estimate, 0.5, 0.005);
  ASSERT_EQ(r.totals.size(), 2u);
  EXPECT_TRUE(r.totals[1].passed);
  EXPECT_TRUE(r.passed());
  EXPECT_THROW(hankel_support_bound(4), std::invalid_argument);
}

TEST(Curves, GridShapes) {
  const auto psi = psi_curve(2000);
  ASSERT_EQ(psi.size(), 2000u);
  EXPECT_TRUE(std::is_sorted(psi.begin(), psi.end(), [](auto& a, auto& b) { return a.x < b.x; }));
  EXPECT_GT(psi.front().x, 0.0);
  EXPECT_LT(psi.back().x, kE);
  const auto lsd = wigner_lsd_curve(100);
  ASSERT_EQ(lsd.size(), 200u);
  EXPECT_DOUBLE_EQ(lsd.front().x, -lsd.back().x);
  EXPECT_DOUBLE_EQ(lsd.front().density, lsd.back().density);
}

}  // namespace
}  // namespace trilsd
