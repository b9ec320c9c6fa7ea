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


#include "trilsd/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <map>
#include <numbers>
#include <optional>
#include <stdexcept>

#include "trilsd/ensembles.hpp"
#include "trilsd/joint.hpp"
#include "trilsd/lsd.hpp"
#include "trilsd/polynomial.hpp"
#include "trilsd/spectra.hpp"
#include "trilsd/volume.hpp"
#include "trilsd/words.hpp"

namespace trilsd {
namespace {

std::string fmt(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof buf, format, args);
  va_end(args);
  return buf;
}

struct Outcome {
  bool passed = true;
  std::string detail;

  void check(bool ok, const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
    if (!ok) {
      passed = false;
      detail += " [FAIL]";
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

const std::map<int, std::string>& names() {
  static const std::map<int, std::string> table = {
      {1, "Table of exact triangular Wigner volumes"},
      {2, "Catalan sums equal k^k/(k+1)!"},
      {3, "G polynomial closed form"},
      {4, "Triangular Wigner spectral moments (gaussian)"},
      {5, "Universality (rademacher, uniform)"},
      {6, "Singular moments of the complex upper-triangular matrix"},
      {7, "Hankel volumes by grid and counting"},
      {8, "Hankel unbounded-support inequality"},
      {9, "Density moments and normalisation"},
      {10, "Lambert W series"},
      {11, "Joint moments and non-freeness"},
      {12, "Anti-diagonal flip conjugation"},
      {13, "Semicircle law for W^u + W^l (shared wiring)"},
      {14, "Catalan volume inequalities up to length 10"},
      {15, "Non-Catalan decay of abab counts"},
      {16, "Supplementary: m2 variance shrinks from n=500 to n=2000"},
  };
  return table;
}

class Runner {
 public:
  explicit Runner(const AcceptanceOptions& options) : options_(options) {}

  Outcome run(int id) {
    switch (id) {
      case 1: return table_one();
      case 2: return moment_identity();
      case 3: return g_identity();
      case 4: return spectral(InputDistribution::StandardGaussian);
      case 5: return universality();
      case 6: return singular();
      case 7: return hankel_volumes();
      case 8: return support_bound();
      case 9: return density();
      case 10: return lambert();
      case 11: return freeness();
      case 12: return conjugation();
      case 13: return semicircle();
      case 14: return appendix();
      case 15: return decay();
      case 16: return variance_decay();
      default: throw std::invalid_argument("unknown criterion " + std::to_string(id));
    }
  }

 private:
  std::uint64_t seed_for(int id) const {
    return derive_seed(options_.seed, 1000 + static_cast<std::uint64_t>(id));
  }

  static Outcome table_one() {
    const auto start = Clock::now();
    const std::map<std::string, Rational> expected = {
        {"aa", Rational(1, 2)},      {"aabb", Rational(1, 3)},
        {"abba", Rational(1, 3)},    {"aabbcc", Rational(1, 4)},
        {"abbcca", Rational(1, 4)},  {"abbacc", Rational(5, 24)},
        {"aabccb", Rational(5, 24)}, {"abccba", Rational(5, 24)},
    };
    Outcome out;
    std::size_t seen = 0;
    for (std::size_t k = 1; k <= 3; ++k) {
      for (const Word& w : enumerate_catalan(k)) {
        ++seen;
        const Rational p = pu_exact_wigner(w);
        const auto it = expected.find(w.str());
        if (it == expected.end()) {
          out.check(false, "unexpected word " + w.str());
        } else if (p != it->second) {
          out.check(false, w.str() + " = " + to_string(p) + " expected " +
                               to_string(it->second));
        }
      }
    }
    out.check(seen == expected.size(), fmt("%zu words (expected %zu)", seen,
                                           expected.size()));
    const double t = seconds_since(start);
    out.check(t < 1.0, fmt("%.3f s < 1 s", t));
    return out;
  }

  static Outcome moment_identity() {
    const auto start = Clock::now();
    Outcome out;
    std::size_t words = 0;
    for (std::size_t k = 1; k <= 8; ++k) {
      Rational sum = 0;
      for (const Word& w : enumerate_catalan(k)) {
        sum += pu_exact_wigner(w);
        ++words;
      }
      if (sum != closed_moment(k)) {
        out.check(false, fmt("k=%zu: ", k) + to_string(sum) + " != " +
                             to_string(closed_moment(k)));
      }
    }
    out.check(true, fmt("%zu words, k=1..8 exact", words));
    const double t = seconds_since(start);
    out.check(t < 60.0, fmt("%.2f s < 60 s", t));
    return out;
  }

  static Outcome g_identity() {
    Outcome out;
    for (std::size_t n = 0; n <= 8; ++n) {
      if (g_polynomial(n) != g_closed_form(n)) {
        out.check(false, fmt("n=%zu: ", n) + g_polynomial(n).str());
      }
    }
    out.check(true, "n=0..8 coefficientwise");
    return out;
  }

  const ReplicateRun& triangular_run(InputDistribution dist, std::size_t n) {
    const auto key = std::make_pair(static_cast<int>(dist), n);
    auto it = runs_.find(key);
    if (it == runs_.end()) {
      SpectralEnsemble e;
      e.pattern = PatternKind::Wigner;
      e.region = Region::UpperAnti;
      it = runs_.emplace(key, run_replicates(e, n, dist, 6, 20,
                                             seed_for(4) + static_cast<std::uint64_t>(dist),
                                             options_.workers))
               .first;
    }
    return it->second;
  }

  void spectral_checks(Outcome& out, InputDistribution dist) {
    const auto& m = triangular_run(dist, 2000).moments;
    const std::string tag(to_string(dist));
    struct Target {
      std::size_t k;
      double value;
      double tol;
    };
    for (const Target t : {Target{1, 0.0, 0.02}, Target{2, 0.5, 0.01},
                           Target{3, 0.0, 0.02}, Target{4, 2.0 / 3.0, 0.02},
                           Target{6, 1.125, 0.06}}) {
      const double v = m[t.k - 1].mean;
      out.check(std::abs(v - t.value) < t.tol,
                fmt("%s m%zu=%.4f (target %.4f, tol %.2f)", tag.c_str(), t.k, v,
                    t.value, t.tol));
    }
  }

  Outcome spectral(InputDistribution dist) {
    Outcome out;
    spectral_checks(out, dist);
    return out;
  }

  Outcome universality() {
    Outcome out;
    spectral_checks(out, InputDistribution::Rademacher);
    spectral_checks(out, InputDistribution::UniformScaled);
    return out;
  }

  Outcome singular() {
    SpectralEnsemble e;
    e.asym_gaussian = true;
    const auto run = run_replicates(e, 1000, InputDistribution::StandardGaussian, 3, 20,
                                    seed_for(6), options_.workers);
    Outcome out;
    const double targets[] = {0.5, 2.0 / 3.0, 1.125};
    const double tols[] = {0.02, 0.03, 0.08};
    for (std::size_t k = 0; k < 3; ++k) {
      const double v = run.moments[k].mean;
      out.check(std::abs(v - targets[k]) < tols[k],
                fmt("m%zu=%.4f (target %.4f, tol %.2f)", k + 1, v, targets[k], tols[k]));
    }
    return out;
  }

  Outcome hankel_volumes() {
    Outcome out;
    const std::size_t sizes[] = {40, 80, 160};
    for (const auto& [text, target] : {std::pair{"aa", 0.5}, std::pair{"aabb", 1.0 / 3.0},
                                       std::pair{"abba", 1.0 / 3.0}}) {
      const Word w = Word::parse(text);
      const PuValue g = pu_grid_hankel(w, 160, true, options_.workers);
      const PuValue c = pu_estimate(PatternKind::Hankel, w, sizes, {}, options_.workers);
      out.check(std::abs(g.estimate - target) <= 0.01,
                fmt("grid %s=%.5f", text, g.estimate));
      out.check(std::abs(c.estimate - target) <= 0.01,
                fmt("count %s=%.5f", text, c.estimate));
    }
    const PuValue abab = pu_grid_hankel(Word::parse("abab"), 160, true, options_.workers);
    out.check(abab.is_exact() && abab.exact == 0, "abab exact 0");
    return out;
  }

  Outcome support_bound() {
    const SupportBoundReport r = hankel_support_bound(3, 160, 0.02, options_.workers);
    Outcome out;
    double worst = 1e9;
    std::string worst_word;
    for (const auto& e : r.words) {
      if (e.margin < worst) {
        worst = e.margin;
        worst_word = e.word.str();
      }
      if (!e.passed) {
        out.check(false, fmt("%s: p_u=%.4f p=%.4f", e.word.str().c_str(),
                             e.triangular.value(), e.full.value()));
      }
    }
    out.check(true, fmt("%zu symmetric words, smallest margin %.4f at %s",
                        r.words.size(), worst, worst_word.c_str()));
    for (const auto& t : r.totals) {
      out.check(t.passed, fmt("k=%zu beta=%.4f beta'=%.4f", t.k, t.beta_triangular,
                              t.beta_full));
    }
    return out;
  }

  static Outcome density() {
    Outcome out;
    const double m0 = density_moment(0);
    out.check(std::abs(m0 - 1.0) <= 1e-8, fmt("mass %.12f", m0));
    for (std::size_t k = 1; k <= 4; ++k) {
      const double v = density_moment(k);
      const double t = closed_moment(k).get_d();
      out.check(std::abs(v - t) <= 1e-6, fmt("m%zu err %.1e", k, std::abs(v - t)));
    }
    const double root_e = std::sqrt(std::numbers::e);
    const double mass = wigner_lsd_mass(-root_e, root_e);
    out.check(std::abs(mass - 1.0) <= 1e-8, fmt("LSD mass on [-sqrt e, sqrt e] %.12f", mass));
    bool outside_zero = true;
    for (double x : {root_e, root_e + 1e-9, 1.7, 2.0, 10.0}) {
      outside_zero = outside_zero && wigner_lsd_density(x) == 0.0 &&
                     wigner_lsd_density(-x) == 0.0;
    }
    out.check(outside_zero, "density vanishes for |x| >= sqrt e");
    return out;
  }

  static Outcome lambert() {
    Outcome out;
    for (double x : {5.0, 10.0, -5.0}) {
      const LambertCheck c = lambert_series_check(x, 40);
      out.check(c.gap <= 1e-8, fmt("x=%g gap %.1e", x, c.gap));
    }
    return out;
  }

  Outcome freeness() {
    const FreenessReport tri = freeness_report(2000, 40, seed_for(11), false,
                                               InputDistribution::StandardGaussian,
                                               options_.workers);
    const FreenessReport full = freeness_report(2000, 40, seed_for(11) + 1, true,
                                                InputDistribution::StandardGaussian,
                                                options_.workers);
    Outcome out;
    out.check(std::abs(tri.a2b2.mean - 1.0 / 3.0) <= 0.02,
              fmt("phi(a1^2 a2^2)=%.4f", tri.a2b2.mean));
    out.check(tri.gap > 5.0 * tri.gap_std_error && tri.non_free,
              fmt("gap %.4f = %.1f stderr", tri.gap, tri.gap / tri.gap_std_error));
    out.check(std::abs(full.gap) <= 3.0 * full.gap_std_error,
              fmt("control gap %.2e within 3 x %.2e", full.gap, full.gap_std_error));
    return out;
  }

  Outcome conjugation() {
    Outcome out;
    const std::size_t n = 400;
    double worst = 0.0;
    for (std::size_t r = 0; r < 10; ++r) {
      const MatrixDraw u = build_triangular(PatternKind::Wigner, n,
                                            InputDistribution::StandardGaussian,
                                            derive_seed(seed_for(12), r));
      const Eigen::MatrixXd flipped = flip_conjugate(u.entries);
      const auto a = eigenvalues(u.entries / std::sqrt(static_cast<double>(n)));
      const auto b = eigenvalues(flipped / std::sqrt(static_cast<double>(n)));
      for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    out.check(worst <= 1e-8, fmt("10 draws n=%zu, max spectral diff %.1e", n, worst));

    SpectralEnsemble upper;
    upper.region = Region::UpperAnti;
    SpectralEnsemble lower;
    lower.region = Region::LowerAnti;
    const auto ru = run_replicates(upper, 1000, InputDistribution::StandardGaussian, 4, 20,
                                   seed_for(12) + 1, options_.workers);
    const auto rl = run_replicates(lower, 1000, InputDistribution::StandardGaussian, 4, 20,
                                   seed_for(12) + 2, options_.workers);
    for (std::size_t k : {2u, 4u}) {
      const auto& a = ru.moments[k - 1];
      const auto& b = rl.moments[k - 1];
      const double tol = 4.0 * std::hypot(a.std_error, b.std_error);
      out.check(std::abs(a.mean - b.mean) <= tol,
                fmt("m%zu upper %.4f lower %.4f (tol %.4f)", k, a.mean, b.mean, tol));
    }
    return out;
  }

  Outcome semicircle() {
    const SemicircleReport r = sum_semicircle_check(2000, 20, seed_for(13),
                                                    Wiring::SharedFullWigner,
                                                    InputDistribution::StandardGaussian,
                                                    options_.workers);
    Outcome out;
    for (std::size_t i = 0; i < r.moments.size(); ++i) {
      const double v = r.moments[i].mean;
      out.check(std::abs(v - r.targets[i]) < r.tolerances[i],
                fmt("m%zu=%.4f (target %g, tol %g)", r.moments[i].k, v, r.targets[i],
                    r.tolerances[i]));
    }
    return out;
  }

  static Outcome appendix() {
    const AppendixReport r = verify_appendix(5);
    Outcome out;
    for (const auto& c : r.clauses) {
      std::string what = fmt("(%s) %zu checked, %zu equal", c.id.c_str(), c.checked,
                             c.equalities);
      if (!c.counterexamples.empty()) what += ", e.g. " + c.counterexamples.front();
      out.check(c.passed, what);
    }
    return out;
  }

  Outcome decay() {
    Outcome out;
    const Word abab = Word::parse("abab");
    double prev = 2.0;
    std::string seq;
    bool strictly = true;
    for (std::size_t n : {40u, 80u, 160u, 320u}) {
      const double c = static_cast<double>(
          count_circuits(PatternKind::Wigner, abab, n, true, {}, options_.workers));
      const double v = c / std::pow(static_cast<double>(n), 3.0);
      strictly = strictly && v < prev;
      prev = v;
      seq += fmt("%s%.5f", seq.empty() ? "" : " > ", v);
    }
    out.check(strictly, seq);
    return out;
  }

  Outcome variance_decay() {
    auto variance = [](const ReplicateRun& run) {
      std::vector<double> m2;
      for (const auto& row : run.per_rep_moments) m2.push_back(row[1]);
      double mean = 0.0;
      for (double v : m2) mean += v;
      mean /= static_cast<double>(m2.size());
      double ss = 0.0;
      for (double v : m2) ss += (v - mean) * (v - mean);
      return ss / static_cast<double>(m2.size() - 1);
    };
    const double small = variance(triangular_run(InputDistribution::StandardGaussian, 500));
    const double large = variance(triangular_run(InputDistribution::StandardGaussian, 2000));
    Outcome out;
    out.check(large < small, fmt("var(m2) %.2e at n=500, %.2e at n=2000", small, large));
    return out;
  }

  AcceptanceOptions options_;
  std::map<std::pair<int, std::size_t>, ReplicateRun> runs_;
};

}  // namespace

std::vector<int> criterion_ids() {
  std::vector<int> ids;
  for (const auto& [id, name] : names()) ids.push_back(id);
  return ids;
}

std::string criterion_name(int id) {
  const auto it = names().find(id);
  if (it == names().end()) throw std::invalid_argument("unknown criterion " + std::to_string(id));
  return it->second;
}

std::vector<CriterionResult> run_acceptance(
    const AcceptanceOptions& options, std::span<const int> ids,
    const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<int> selected(ids.begin(), ids.end());
  if (selected.empty()) selected = criterion_ids();
  std::sort(selected.begin(), selected.end());
  selected.erase(std::unique(selected.begin(), selected.end()), selected.end());
  Runner runner(options);
  std::vector<CriterionResult> results;
  for (int id : selected) {
    CriterionResult r;
    r.id = id;
    r.name = criterion_name(id);
    const auto start = Clock::now();
    try {
      const Outcome o = runner.run(id);
      r.passed = o.passed;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = seconds_since(start);
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_result(const CriterionResult& result) {
  return fmt("[%s] %2d  %s (%.1f s): ", result.passed ? "PASS" : "FAIL", result.id,
             result.name.c_str(), result.seconds) +
         result.detail;
}

}  // namespace trilsd
