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

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "trilsd/words.hpp"

namespace trilsd {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;

}  // namespace

Rational closed_moment(std::size_t k) {
  mpz_class num = 1;
  mpz_class den = 1;
  for (std::size_t i = 0; i < k; ++i) num *= static_cast<unsigned long>(k);
  for (std::size_t i = 2; i <= k + 1; ++i) den *= static_cast<unsigned long>(i);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string_view to_string(MomentMethod method) {
  switch (method) {
    case MomentMethod::Exact:
      return "exact";
    case MomentMethod::Count:
      return "count";
    case MomentMethod::Grid:
      return "grid";
  }
  return "?";
}

MomentMethod parse_method(std::string_view name) {
  if (name == "exact") return MomentMethod::Exact;
  if (name == "count") return MomentMethod::Count;
  if (name == "grid") return MomentMethod::Grid;
  throw std::invalid_argument("unknown method '" + std::string(name) +
                              "' (expected exact|count|grid)");
}

PuValue sum_pu(const std::vector<PuValue>& terms) {
  Rational exact = 0;
  const PuValue* shape = nullptr;
  for (const PuValue& t : terms) {
    if (t.is_exact()) {
      exact += t.exact;
    } else if (shape == nullptr) {
      shape = &t;
    }
  }
  if (shape == nullptr) return PuValue::exact_value(exact);
  PuValue out;
  out.mode = PuValue::Mode::Estimated;
  out.n_list = shape->n_list;
  out.raw.assign(shape->raw.size(), exact.get_d());
  out.estimate = exact.get_d();
  for (const PuValue& t : terms) {
    if (t.is_exact()) continue;
    if (t.n_list != out.n_list) {
      throw std::invalid_argument("sum_pu: terms use different size lists");
    }
    out.estimate += t.estimate;
    out.error_bar += t.error_bar;
    for (std::size_t i = 0; i < out.raw.size(); ++i) out.raw[i] += t.raw[i];
  }
  return out;
}

PuValue beta_2k(PatternKind pattern, std::size_t k, MomentMethod method,
                const MomentOptions& options) {
  std::vector<PuValue> terms;
  switch (method) {
    case MomentMethod::Exact:
      if (pattern != PatternKind::Wigner) {
        throw std::invalid_argument("beta_2k: exact method needs the Wigner pattern");
      }
      for (const Word& w : enumerate_catalan(k)) {
        terms.push_back(PuValue::exact_value(pu_exact_wigner(w)));
      }
      break;
    case MomentMethod::Count:
      for (const Word& w : enumerate_pair_matched(k)) {
        terms.push_back(pu_estimate(pattern, w, options.n_list, options.limits,
                                    options.workers));
      }
      break;
    case MomentMethod::Grid:
      if (pattern != PatternKind::Hankel) {
        throw std::invalid_argument("beta_2k: grid method needs the Hankel pattern");
      }
      for (const Word& w : enumerate_pair_matched(k)) {
        terms.push_back(pu_grid_hankel(w, options.grid, true, options.workers));
      }
      break;
  }
  return sum_pu(terms);
}

MomentTable moment_table(PatternKind pattern, std::size_t k_max,
                         MomentMethod method, const MomentOptions& options) {
  MomentTable table;
  table.pattern = pattern;
  table.method = method;
  for (std::size_t k = 1; k <= k_max; ++k) {
    table.entries.push_back({k, beta_2k(pattern, k, method, options)});
  }
  return table;
}

// ---------------------------------------------------------------------------
// The density psi

double x_of_v(double v) {
  if (v <= 0.0) return kE;
  if (v >= kPi) return 0.0;
  const double s = std::sin(v);
  return (s / v) * std::exp(v * std::cos(v) / s);
}

namespace {

// log x(v); finite across (0, pi) where x(v) itself underflows near pi.
double log_x_of_v(double v) {
  const double s = std::sin(v);
  return std::log(s / v) + v * std::cos(v) / s;
}

// psi(x(v)) * |x'(v)|, so that int_0^e h(x) psi(x) dx = int_0^pi h(x(v)) g(v) dv.
// Near zero the bracket cancels to v^2 - 2 v^4 / 9.
double mass_weight(double v) {
  if (v < 1e-3) {
    const double v2 = v * v;
    return (v2 - 2.0 * v2 * v2 / 9.0) / kPi;
  }
  const double sinc = std::sin(v) / v;
  return (1.0 + sinc * sinc - std::sin(2.0 * v) / v) / kPi;
}

double integrate_v(const auto& f, double lo, double hi) {
  using boost::math::quadrature::gauss_kronrod;
  return gauss_kronrod<double, 61>::integrate(f, lo, hi, 20, 1e-14);
}

// The v in (0, pi) with x(v) = x, by bisection on the decreasing map.
double invert_x(double x) {
  const double target = std::log(x);
  double lo = 0.0;
  double hi = kPi;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (log_x_of_v(mid) > target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

void ensure_monotone() {
  static std::once_flag once;
  static bool monotone = false;
  std::call_once(once, [] { monotone = check_parametrization_monotone(); });
  if (!monotone) {
    throw std::runtime_error("x(v) is not monotone on the startup grid");
  }
}

}  // namespace

DensityPoint psi_parametric(double v) {
  if (!(v > 0.0 && v < kPi)) {
    throw std::domain_error("psi_parametric: v must lie in (0, pi)");
  }
  const double s = std::sin(v);
  const double vcot = v * std::cos(v) / s;
  return {v, (s / v) * std::exp(vcot), s * std::exp(-vcot) / kPi};
}

bool check_parametrization_monotone(std::size_t points) {
  double prev = 1.0;  // log e
  for (std::size_t i = 1; i <= points; ++i) {
    const double lx = log_x_of_v(kPi * static_cast<double>(i) /
                                 static_cast<double>(points + 1));
    if (!(lx < prev)) return false;
    prev = lx;
  }
  return true;
}

double psi_at(double x) {
  if (!(x > 0.0 && x < kE)) {
    throw std::domain_error("psi_at: x must lie in (0, e)");
  }
  ensure_monotone();
  return psi_parametric(invert_x(x)).psi;
}

double wigner_lsd_density(double x) {
  if (x == 0.0) throw std::domain_error("wigner_lsd_density: singular at 0");
  const double ax = std::abs(x);
  if (ax >= std::sqrt(kE)) return 0.0;
  return ax * psi_at(ax * ax);
}

double density_moment_real(double p) {
  if (p < 0.0) throw std::domain_error("density_moment: power must be >= 0");
  return integrate_v([p](double v) {
    return p == 0.0 ? mass_weight(v) : std::pow(x_of_v(v), p) * mass_weight(v);
  }, 0.0, kPi);
}

double density_moment(std::size_t k) {
  return density_moment_real(static_cast<double>(k));
}

double wigner_lsd_moment(std::size_t j) {
  // int x^j |x| psi(x^2) dx = (1 + (-1)^j)/2 * int y^{j/2} psi(y) dy.
  return j % 2 == 1 ? 0.0 : density_moment_real(0.5 * static_cast<double>(j));
}

double wigner_lsd_mass(double lo, double hi) {
  if (hi < lo) throw std::invalid_argument("wigner_lsd_mass: hi < lo");
  // Mass of [0, t] for t >= 0 is half the psi-mass of [0, t^2].
  auto half = [](double t) {
    const double y = t * t;
    if (y <= 0.0) return 0.0;
    const double v = y >= kE ? 0.0 : invert_x(y);
    return 0.5 * integrate_v(mass_weight, v, kPi);
  };
  auto signed_half = [&](double t) { return t < 0 ? -half(-t) : half(t); };
  return signed_half(hi) - signed_half(lo);
}

// ---------------------------------------------------------------------------
// Lambert W

double lambert_w0(double y) {
  constexpr double kBranch = -1.0 / kE;
  if (std::isnan(y) || y < kBranch) {
    throw std::domain_error("lambert_w0: argument below -1/e");
  }
  if (y == kBranch) return -1.0;
  if (y == 0.0) return 0.0;
  double w;
  if (y < -0.25) {
    // Expansion about the branch point in p = sqrt(2 (e y + 1)).
    const double p = std::sqrt(2.0 * (kE * y + 1.0));
    w = -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
  } else if (y < kE) {
    w = std::log1p(y);
  } else {
    const double l = std::log(y);
    w = l - std::log(l);
  }
  const double tol = 1e-14 * std::max(1.0, std::abs(y));
  for (int iter = 0; iter < 100; ++iter) {
    const double ew = std::exp(w);
    const double f = w * ew - y;
    if (std::abs(f) <= tol) break;
    const double wp1 = w + 1.0;
    if (wp1 == 0.0) break;
    const double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
    w -= step;
    if (w < -1.0) w = -1.0;
    if (std::abs(step) <= 1e-17 * (1.0 + std::abs(w))) break;
  }
  return w;
}

LambertCheck lambert_series_check(double x, std::size_t terms) {
  if (!(std::abs(x) > kE)) {
    throw std::domain_error("lambert_series_check: need |x| > e");
  }
  if (terms == 0) throw std::invalid_argument("lambert_series_check: terms must be >= 1");
  LambertCheck out;
  out.lhs = 1.0 + 1.0 / (x * lambert_w0(-1.0 / x));
  // term_k = k^k/(k+1)! x^{-(k+1)}, accumulated in logs to avoid overflow.
  for (std::size_t k = 0; k < terms; ++k) {
    const double kd = static_cast<double>(k);
    const double log_mag = (k == 0 ? 0.0 : kd * std::log(kd)) -
                           std::lgamma(kd + 2.0) -
                           (kd + 1.0) * std::log(std::abs(x));
    const double sign = (x < 0 && k % 2 == 0) ? -1.0 : 1.0;
    out.rhs += sign * std::exp(log_mag);
  }
  out.gap = std::abs(out.lhs - out.rhs);
  return out;
}

// ---------------------------------------------------------------------------
// Unbounded support comparison for Hankel

bool SupportBoundReport::passed() const {
  return std::all_of(words.begin(), words.end(),
                     [](const SupportBoundEntry& e) { return e.passed; }) &&
         std::all_of(totals.begin(), totals.end(),
                     [](const SupportBoundTotal& t) { return t.passed; });
}

SupportBoundReport hankel_support_bound(std::size_t k_max, std::size_t grid,
                                        double tolerance, std::size_t workers) {
  if (k_max > 3) throw std::invalid_argument("hankel_support_bound: k_max must be <= 3");
  SupportBoundReport report;
  report.k_max = k_max;
  report.grid = grid;
  report.tolerance = tolerance;
  for (std::size_t k = 1; k <= k_max; ++k) {
    const double scale = std::ldexp(1.0, -static_cast<int>(k));
    SupportBoundTotal total;
    total.k = k;
    for (const Word& w : enumerate_symmetric(k)) {
      SupportBoundEntry e;
      e.word = w;
      e.full = pu_grid_hankel(w, grid, false, workers);
      e.triangular = pu_grid_hankel(w, grid, true, workers);
      const double slack = e.triangular.error_bar + scale * e.full.error_bar;
      e.margin = e.triangular.value() - scale * e.full.value() + slack;
      e.passed = e.margin >= -tolerance;
      total.beta_full += e.full.value();
      total.beta_triangular += e.triangular.value();
      total.error_bar += slack;
      report.words.push_back(std::move(e));
    }
    total.passed = total.beta_triangular - scale * total.beta_full + total.error_bar >=
                   -tolerance;
    report.totals.push_back(total);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Curves

std::vector<CurvePoint> psi_curve(std::size_t points) {
  if (points == 0) throw std::invalid_argument("psi_curve: points must be >= 1");
  ensure_monotone();
  std::vector<CurvePoint> out;
  out.reserve(points);
  for (std::size_t i = 0; i < points; ++i) {
    const double x = kE * (static_cast<double>(i) + 0.5) / static_cast<double>(points);
    const DensityPoint d = psi_parametric(invert_x(x));
    out.push_back({d.v, x, d.psi});
  }
  return out;
}

std::vector<CurvePoint> wigner_lsd_curve(std::size_t points) {
  if (points == 0) throw std::invalid_argument("wigner_lsd_curve: points must be >= 1");
  ensure_monotone();
  const double edge = std::sqrt(kE);
  std::vector<CurvePoint> half;
  half.reserve(points);
  for (std::size_t i = 0; i < points; ++i) {
    const double r = edge * (static_cast<double>(i) + 0.5) / static_cast<double>(points);
    const DensityPoint d = psi_parametric(invert_x(r * r));
    half.push_back({d.v, r, r * d.psi});
  }
  std::vector<CurvePoint> out;
  out.reserve(2 * points);
  for (auto it = half.rbegin(); it != half.rend(); ++it) out.push_back({it->v, -it->x, it->density});
  out.insert(out.end(), half.begin(), half.end());
  return out;
}

}  // namespace trilsd
