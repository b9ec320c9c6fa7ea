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


#ifndef TRILSD_LSD_HPP_
#define TRILSD_LSD_HPP_

#include <cstddef>
#include <string_view>
#include <vector>

#include "trilsd/patterns.hpp"
#include "trilsd/polynomial.hpp"
#include "trilsd/volume.hpp"

namespace trilsd {

/// k^k/(k+1)!, with 0^0 = 1.
Rational closed_moment(std::size_t k);

enum class MomentMethod { Exact, Count, Grid };

std::string_view to_string(MomentMethod method);
MomentMethod parse_method(std::string_view name);

struct MomentOptions {
  std::vector<std::size_t> n_list{40, 80, 160};  ///< Count method
  std::size_t grid = 160;                        ///< Grid method
  CountLimits limits;
  std::size_t workers = 0;
};

/// Sum of p_u(w) over pair-matched words of length 2k. Exact requires Wigner
/// (summed over Catalan words); Grid requires Hankel. Other combinations
/// throw std::invalid_argument.
PuValue beta_2k(PatternKind pattern, std::size_t k, MomentMethod method,
                const MomentOptions& options = {});

struct MomentEntry {
  std::size_t k = 0;
  PuValue beta;
};

struct MomentTable {
  PatternKind pattern = PatternKind::Wigner;
  MomentMethod method = MomentMethod::Exact;
  std::vector<MomentEntry> entries;
};

MomentTable moment_table(PatternKind pattern, std::size_t k_max,
                         MomentMethod method, const MomentOptions& options = {});

/// Adds contributions; the result is Exact only when every term is.
PuValue sum_pu(const std::vector<PuValue>& terms);

struct DensityPoint {
  double v = 0.0;
  double x = 0.0;
  double psi = 0.0;
};

/// x(v) = (sin v / v) exp(v cot v), extended by x(0) = e and x(pi) = 0.
double x_of_v(double v);

/// The point of the parametric curve at v in (0, pi). Throws
/// std::domain_error outside.
DensityPoint psi_parametric(double v);

/// True iff x(v) strictly decreases over `points` interior grid points.
bool check_parametrization_monotone(std::size_t points = 10000);

/// psi(x) for 0 < x < e by bisection in v down to a 1e-12 bracket.
/// Throws std::domain_error outside (0, e).
double psi_at(double x);

/// |x| psi(x^2); zero for |x| >= sqrt(e). Throws std::domain_error at 0.
double wigner_lsd_density(double x);

/// int_0^e x^p psi(x) dx for real p >= 0, integrated in v.
double density_moment_real(double p);

/// int_0^e x^k psi(x) dx; k = 0 gives the total mass.
double density_moment(std::size_t k);

/// j-th moment of the triangular Wigner limit |x| psi(x^2).
double wigner_lsd_moment(std::size_t j);

/// Mass of |x| psi(x^2) inside [lo, hi].
double wigner_lsd_mass(double lo, double hi);

/// Principal branch of W(y) e^{W(y)} = y by Halley iteration.
/// Throws std::domain_error for y < -1/e.
double lambert_w0(double y);

struct LambertCheck {
  double lhs = 0.0;  ///< 1 + 1/(x W0(-1/x))
  double rhs = 0.0;  ///< partial sum of k^k/(k+1)! x^{-(k+1)}, k < terms
  double gap = 0.0;
};

/// Compares the closed form against the series. Throws std::domain_error
/// for |x| <= e and std::invalid_argument for terms == 0.
LambertCheck lambert_series_check(double x, std::size_t terms);

struct SupportBoundEntry {
  Word word;
  PuValue full;        ///< p(w), no triangular constraint
  PuValue triangular;  ///< p_u(w)
  double margin = 0.0;  ///< p_u - p/2^k + combined error bars
  bool passed = false;
};

struct SupportBoundTotal {
  std::size_t k = 0;
  double beta_full = 0.0;
  double beta_triangular = 0.0;
  double error_bar = 0.0;
  bool passed = false;
};

struct SupportBoundReport {
  std::size_t k_max = 0;
  std::size_t grid = 0;
  double tolerance = 0.0;
  std::vector<SupportBoundEntry> words;
  std::vector<SupportBoundTotal> totals;
  bool passed() const;
};

/// Checks p_u(w) >= p(w)/2^k - tolerance - error bars for every symmetric
/// Hankel word of half length <= k_max (<= 3), and the summed inequality
/// beta_2k >= beta'_2k / 2^k.
SupportBoundReport hankel_support_bound(std::size_t k_max, std::size_t grid = 160,
                                        double tolerance = 0.0,
                                        std::size_t workers = 0);

struct CurvePoint {
  double v = 0.0;
  double x = 0.0;
  double density = 0.0;
};

/// psi at the midpoints of `points` equal cells of (0, e).
std::vector<CurvePoint> psi_curve(std::size_t points = 2000);

/// |x| psi(x^2) at the midpoints of `points` equal cells of (0, sqrt e),
/// mirrored to both signs (2 * points rows, ascending x).
std::vector<CurvePoint> wigner_lsd_curve(std::size_t points = 2000);

}  // namespace trilsd

#endif  // TRILSD_LSD_HPP_
