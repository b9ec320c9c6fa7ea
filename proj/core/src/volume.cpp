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


#include "trilsd/volume.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>

#include "trilsd/errors.hpp"
#include "trilsd/extrapolation.hpp"
#include "trilsd/parallel.hpp"

namespace trilsd {

PuValue PuValue::exact_value(const Rational& q) {
  PuValue out;
  out.mode = Mode::Exact;
  out.exact = q;
  out.estimate = q.get_d();
  return out;
}

double PuValue::value() const {
  return mode == Mode::Exact ? exact.get_d() : estimate;
}

RationalPolynomial qw_polynomial(const Word& w) {
  if (w.empty()) return RationalPolynomial::constant(1);
  if (!is_catalan(w)) {
    throw std::domain_error("qw_polynomial: word " + w.str() + " is not Catalan");
  }
  const auto [inner, rest] = split_first_block(w);
  // F(1 - x) where F' = Q_inner and F(0) = 0.
  RationalPolynomial nested =
      qw_polynomial(inner).antiderivative().compose_affine(1, -1);
  if (!rest.empty()) nested *= qw_polynomial(rest);
  return nested;
}

Rational pu_exact_wigner(const Word& w) {
  return qw_polynomial(w).integrate(0, 1);
}

RationalPolynomial g_polynomial(std::size_t n) {
  if (n > 8) throw std::invalid_argument("g_polynomial: n must be <= 8");
  RationalPolynomial sum;
  for (const Word& w : enumerate_catalan(n)) sum += qw_polynomial(w);
  return sum;
}

RationalPolynomial g_closed_form(std::size_t n) {
  if (n == 0) return RationalPolynomial::constant(1);
  const RationalPolynomial one_minus_x{1, -1};
  const RationalPolynomial shifted{static_cast<long>(n + 1), -1};
  mpz_class factorial = 1;
  for (std::size_t i = 2; i <= n; ++i) factorial *= static_cast<unsigned long>(i);
  RationalPolynomial out = one_minus_x * shifted.pow(n - 1);
  out *= Rational(mpz_class(1), factorial);
  return out;
}

// ---------------------------------------------------------------------------
// Circuit counting

namespace {

std::size_t branch_bound(PatternKind pattern) {
  switch (pattern) {
    case PatternKind::Wigner:
    case PatternKind::Hankel:
      return 1;
    case PatternKind::Toeplitz:
      return 2;
    case PatternKind::SymmetricCirculant:
      return 4;
  }
  return 4;
}

class CircuitCounter {
 public:
  CircuitCounter(PatternKind pattern, const Word& w, std::int64_t n,
                 bool triangular)
      : pattern_(pattern),
        n_(n),
        triangular_(triangular),
        len_(w.size()),
        partner_(partner_positions(w)),
        pi_(w.size() + 1, 0),
        edge_(w.size() + 1) {}

  std::uint64_t count_from(std::int64_t start) {
    pi_[0] = start;
    return step(1);
  }

 private:
  // Solutions b in [1, n] of L(a, b) = t, deduplicated.
  int solve(std::int64_t a, LinkValue t, std::int64_t* out) const {
    int count = 0;
    auto push = [&](std::int64_t b) {
      if (b < 1 || b > n_) return;
      for (int i = 0; i < count; ++i) {
        if (out[i] == b) return;
      }
      if (link_value_unchecked(pattern_, a, b, n_) == t) out[count++] = b;
    };
    switch (pattern_) {
      case PatternKind::Wigner:
        if (a == t.first) push(t.second);
        if (a == t.second) push(t.first);
        break;
      case PatternKind::Hankel:
        push(t.first - a);
        break;
      case PatternKind::Toeplitz:
        push(a - t.first);
        push(a + t.first);
        break;
      case PatternKind::SymmetricCirculant:
        push(a - t.first);
        push(a + t.first);
        push(a - (n_ - t.first));
        push(a + (n_ - t.first));
        break;
    }
    return count;
  }

  std::uint64_t step(std::size_t p) {
    const std::int64_t prev = pi_[p - 1];
    const std::size_t q = partner_[p];
    if (q > p) {
      const std::int64_t hi = triangular_ ? std::min(n_, n_ + 1 - prev) : n_;
      std::uint64_t total = 0;
      for (std::int64_t b = 1; b <= hi; ++b) {
        pi_[p] = b;
        edge_[p] = link_value_unchecked(pattern_, prev, b, n_);
        total += step(p + 1);
      }
      return total;
    }
    const LinkValue t = edge_[q];
    if (p == len_) {
      // The circuit must close, so the only candidate is pi(0).
      const std::int64_t b = pi_[0];
      if (triangular_ && prev + b > n_ + 1) return 0;
      return link_value_unchecked(pattern_, prev, b, n_) == t ? 1 : 0;
    }
    std::int64_t candidates[4];
    const int c = solve(prev, t, candidates);
    std::uint64_t total = 0;
    for (int i = 0; i < c; ++i) {
      const std::int64_t b = candidates[i];
      if (triangular_ && prev + b > n_ + 1) continue;
      pi_[p] = b;
      edge_[p] = t;
      total += step(p + 1);
    }
    return total;
  }

  PatternKind pattern_;
  std::int64_t n_;
  bool triangular_;
  std::size_t len_;
  std::vector<std::size_t> partner_;
  std::vector<std::int64_t> pi_;
  std::vector<LinkValue> edge_;
};

}  // namespace

std::uint64_t count_circuits(PatternKind pattern, const Word& w, std::size_t n,
                             bool triangular, const CountLimits& limits,
                             std::size_t workers) {
  if (n < 1) throw std::invalid_argument("count_circuits: n must be >= 1");
  if (!is_pair_matched(w)) {
    throw std::invalid_argument("count_circuits: word " + w.str() +
                                " is not pair-matched");
  }
  const std::size_t k = w.half_length();
  if (k > limits.max_half_length) {
    throw ResourceError("count_circuits: half length " + std::to_string(k) +
                        " exceeds cap " + std::to_string(limits.max_half_length));
  }
  const double cost = std::pow(static_cast<double>(n), static_cast<double>(k + 1)) *
                      std::pow(static_cast<double>(branch_bound(pattern)),
                               static_cast<double>(k));
  if (cost > limits.max_cost) {
    throw ResourceError("count_circuits: estimated cost " + std::to_string(cost) +
                        " exceeds cap");
  }
  if (w.empty()) return n;
  const auto partial = parallel_map(n, workers, [&](std::size_t i) {
    CircuitCounter counter(pattern, w, static_cast<std::int64_t>(n), triangular);
    return counter.count_from(static_cast<std::int64_t>(i) + 1);
  });
  std::uint64_t total = 0;
  for (std::uint64_t c : partial) total += c;
  return total;
}

PuValue pu_estimate(PatternKind pattern, const Word& w,
                    std::span<const std::size_t> n_list,
                    const CountLimits& limits, std::size_t workers) {
  if (n_list.size() < 3) {
    throw std::invalid_argument("pu_estimate: need at least three sizes");
  }
  PuValue out;
  out.mode = PuValue::Mode::Estimated;
  out.n_list.assign(n_list.begin(), n_list.end());
  const double exponent = static_cast<double>(w.half_length() + 1);
  for (std::size_t n : n_list) {
    const std::uint64_t c = count_circuits(pattern, w, n, true, limits, workers);
    out.raw.push_back(static_cast<double>(c) /
                      std::pow(static_cast<double>(n), exponent));
  }
  const Extrapolation ex = richardson_first_order(out.n_list, out.raw);
  out.estimate = ex.estimate;
  out.error_bar = ex.error_bar;
  return out;
}

// ---------------------------------------------------------------------------
// Hankel forms and the grid engine

bool HankelForms::is_generating(std::size_t j) const {
  return std::binary_search(generating.begin(), generating.end(), j);
}

HankelForms hankel_forms(const Word& w) {
  if (!is_pair_matched(w)) {
    throw std::invalid_argument("hankel_forms: word " + w.str() +
                                " is not pair-matched");
  }
  HankelForms out;
  out.word = w;
  out.generating = generating_vertices(w);
  const std::size_t levels = out.generating.size();
  const auto partner = partner_positions(w);
  out.forms.assign(w.size() + 1, std::vector<std::int64_t>(levels, 0));
  std::size_t level = 0;
  out.forms[0][level++] = 1;
  for (std::size_t j = 1; j <= w.size(); ++j) {
    const std::size_t i = partner[j];
    if (i > j) {
      out.forms[j][level++] = 1;
      continue;
    }
    for (std::size_t l = 0; l < levels; ++l) {
      out.forms[j][l] = out.forms[i - 1][l] + out.forms[i][l] - out.forms[j - 1][l];
    }
  }
  out.closure_identity = out.forms[w.size()] == out.forms[0];
  return out;
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  return -floor_div(-a, b);
}

struct LinearConstraint {
  std::vector<std::int64_t> coeff;
  std::optional<std::int64_t> lo;
  std::optional<std::int64_t> hi;
  int level = -1;  // highest variable with a nonzero coefficient
};

class GridCounter {
 public:
  GridCounter(std::vector<LinearConstraint> constraints, std::size_t levels,
              std::int64_t m)
      : constraints_(std::move(constraints)),
        levels_(levels),
        m_(m),
        owned_(levels),
        touching_(levels),
        partial_(constraints_.size(), 0) {
    for (std::size_t c = 0; c < constraints_.size(); ++c) {
      const auto& con = constraints_[c];
      if (con.level < 0) {
        if ((con.lo && *con.lo > 0) || (con.hi && *con.hi < 0)) infeasible_ = true;
        continue;
      }
      owned_[static_cast<std::size_t>(con.level)].push_back(c);
      for (int l = 0; l < con.level; ++l) {
        if (con.coeff[static_cast<std::size_t>(l)] != 0) {
          touching_[static_cast<std::size_t>(l)].push_back(c);
        }
      }
    }
  }

  std::uint64_t count_with_first(std::int64_t u0) {
    if (infeasible_) return 0;
    const auto [a, b] = interval(0);
    if (u0 < a || u0 > b) return 0;
    if (levels_ == 1) return 1;
    shift(0, u0);
    const std::uint64_t total = count(1);
    shift(0, -u0);
    return total;
  }

 private:
  std::pair<std::int64_t, std::int64_t> interval(std::size_t level) const {
    std::int64_t a = 1;
    std::int64_t b = m_;
    for (std::size_t c : owned_[level]) {
      const auto& con = constraints_[c];
      const std::int64_t k = con.coeff[level];
      const std::int64_t r = partial_[c];
      // lo <= k u + r <= hi
      if (k > 0) {
        if (con.lo) a = std::max(a, ceil_div(*con.lo - r, k));
        if (con.hi) b = std::min(b, floor_div(*con.hi - r, k));
      } else {
        if (con.hi) a = std::max(a, ceil_div(*con.hi - r, k));
        if (con.lo) b = std::min(b, floor_div(*con.lo - r, k));
      }
    }
    return {a, b};
  }

  void shift(std::size_t level, std::int64_t u) {
    for (std::size_t c : touching_[level]) {
      partial_[c] += constraints_[c].coeff[level] * u;
    }
  }

  std::uint64_t count(std::size_t level) {
    const auto [a, b] = interval(level);
    if (a > b) return 0;
    if (level + 1 == levels_) return static_cast<std::uint64_t>(b - a + 1);
    std::uint64_t total = 0;
    for (std::int64_t u = a; u <= b; ++u) {
      shift(level, u);
      total += count(level + 1);
      shift(level, -u);
    }
    return total;
  }

  std::vector<LinearConstraint> constraints_;
  std::size_t levels_;
  std::int64_t m_;
  std::vector<std::vector<std::size_t>> owned_;
  std::vector<std::vector<std::size_t>> touching_;
  std::vector<std::int64_t> partial_;
  bool infeasible_ = false;
};

LinearConstraint make_constraint(std::vector<std::int64_t> coeff,
                                 std::optional<std::int64_t> lo,
                                 std::optional<std::int64_t> hi) {
  LinearConstraint con{std::move(coeff), lo, hi, -1};
  for (std::size_t l = 0; l < con.coeff.size(); ++l) {
    if (con.coeff[l] != 0) con.level = static_cast<int>(l);
  }
  return con;
}

}  // namespace

std::uint64_t grid_count_hankel(const HankelForms& forms, std::size_t m,
                                bool triangular, std::size_t workers) {
  if (m < 1) throw std::invalid_argument("grid_count_hankel: m must be >= 1");
  const auto mm = static_cast<std::int64_t>(m);
  const std::size_t levels = forms.generating.size();
  std::vector<LinearConstraint> constraints;
  for (std::size_t j = 1; j < forms.forms.size(); ++j) {
    if (forms.is_generating(j)) {
      if (triangular) {
        std::vector<std::int64_t> sum(levels);
        for (std::size_t l = 0; l < levels; ++l) {
          sum[l] = forms.forms[j - 1][l] + forms.forms[j][l];
        }
        constraints.push_back(make_constraint(std::move(sum), std::nullopt, mm + 1));
      }
    } else {
      constraints.push_back(make_constraint(forms.forms[j], 1, mm));
    }
  }
  const auto partial = parallel_map(m, workers, [&](std::size_t i) {
    GridCounter counter(constraints, levels, mm);
    return counter.count_with_first(static_cast<std::int64_t>(i) + 1);
  });
  std::uint64_t total = 0;
  for (std::uint64_t c : partial) total += c;
  return total;
}

PuValue pu_grid_hankel(const Word& w, std::size_t m, bool triangular,
                       std::size_t workers) {
  if (m < 4 || m % 4 != 0) {
    throw std::invalid_argument("pu_grid_hankel: m must be a positive multiple of 4");
  }
  const HankelForms forms = hankel_forms(w);
  if (!forms.closure_identity) return PuValue::exact_value(0);
  PuValue out;
  out.mode = PuValue::Mode::Estimated;
  out.n_list = {m / 4, m / 2, m};
  const double exponent = static_cast<double>(forms.generating.size());
  for (std::size_t r : out.n_list) {
    const std::uint64_t c = grid_count_hankel(forms, r, triangular, workers);
    out.raw.push_back(static_cast<double>(c) /
                      std::pow(static_cast<double>(r), exponent));
  }
  const Extrapolation ex = richardson_first_order(out.n_list, out.raw);
  out.estimate = ex.estimate;
  out.error_bar = ex.error_bar;
  return out;
}

// ---------------------------------------------------------------------------
// Volume inequalities over Catalan words

bool AppendixReport::passed() const {
  return std::all_of(clauses.begin(), clauses.end(),
                     [](const ClauseResult& c) { return c.passed; });
}

namespace {

constexpr std::size_t kMaxCounterexamples = 10;

class PuCache {
 public:
  const Rational& operator()(const Word& w) {
    auto it = cache_.find(w);
    if (it == cache_.end()) it = cache_.emplace(w, pu_exact_wigner(w)).first;
    return it->second;
  }

 private:
  std::map<Word, Rational> cache_;
};

ClauseResult make_clause(std::string id, std::string statement) {
  ClauseResult c;
  c.id = std::move(id);
  c.statement = std::move(statement);
  return c;
}

void record(ClauseResult& clause, bool ok, bool equal, const std::string& what) {
  ++clause.checked;
  if (equal) ++clause.equalities;
  if (!ok) {
    clause.passed = false;
    if (clause.counterexamples.size() < kMaxCounterexamples) {
      clause.counterexamples.push_back(what);
    }
  }
}

}  // namespace

AppendixReport verify_appendix(std::size_t k_max) {
  if (k_max > 6) throw std::invalid_argument("verify_appendix: k_max must be <= 6");
  AppendixReport report;
  report.k_max = k_max;
  PuCache pu;

  ClauseResult a = make_clause("a", "p(a1a1...akak) = 1/(k+1)");
  ClauseResult b = make_clause("b", "p(w) <= 1/(k+1)");
  ClauseResult c = make_clause("c", "p(a w1 a w2) <= p(a a w1 w2)");
  ClauseResult d = make_clause("d", "p(abba w1 w2) >= p(ab w1 ba w2)");
  ClauseResult e = make_clause("e", "p(rotate(w, r)) = p(w)");

  const Word aa = doubled_word(1);
  const Word abba = wrap(aa);
  std::vector<std::vector<Word>> catalan(k_max + 1);
  for (std::size_t k = 0; k <= k_max; ++k) catalan[k] = enumerate_catalan(k);

  for (std::size_t k = 1; k <= k_max; ++k) {
    const Rational bound(mpz_class(1), mpz_class(static_cast<unsigned long>(k + 1)));
    const Word dw = doubled_word(k);
    const Rational& pd = pu(dw);
    record(a, pd == bound, true, dw.str() + ": " + to_string(pd));

    for (const Word& w : catalan[k]) {
      const Rational& p = pu(w);
      record(b, p <= bound, p == bound, w.str() + ": " + to_string(p));

      const auto [w1, w2] = split_first_block(w);
      const Word target = concat(aa, concat(w1, w2));
      const Rational& pt = pu(target);
      record(c, p <= pt, p == pt,
             w.str() + " vs " + target.str() + ": " + to_string(p) + " > " +
                 to_string(pt));

      for (std::size_t r = 0; r < w.size(); ++r) {
        const Word rw = rotate(w, r);
        if (!is_catalan(rw)) {
          record(e, false, false, w.str() + " rotated by " + std::to_string(r) +
                                      " is not Catalan");
          continue;
        }
        const Rational& pr = pu(rw);
        record(e, pr == p, pr == p,
               w.str() + " rotated by " + std::to_string(r) + ": " +
                   to_string(pr) + " != " + to_string(p));
      }
    }
  }

  // abba w1 w2 has length 4 + |w1| + |w2|.
  for (std::size_t k1 = 0; k1 + 2 <= k_max; ++k1) {
    for (std::size_t k2 = 0; k1 + k2 + 2 <= k_max; ++k2) {
      for (const Word& w1 : catalan[k1]) {
        for (const Word& w2 : catalan[k2]) {
          const Word lhs = concat(abba, concat(w1, w2));
          const Word rhs = concat(wrap(wrap(w1)), w2);
          const Rational& pl = pu(lhs);
          const Rational& pr = pu(rhs);
          record(d, pl >= pr, pl == pr,
                 lhs.str() + " vs " + rhs.str() + ": " + to_string(pl) + " < " +
                     to_string(pr));
        }
      }
    }
  }

  report.clauses = {a, b, c, d, e};
  return report;
}

}  // namespace trilsd
