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


#include "trilsd/joint.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <cmath>
#include <stdexcept>

#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/students_t.hpp>

#include "trilsd/parallel.hpp"
#include "trilsd/rng.hpp"

namespace trilsd {

Monomial parse_monomial(std::string_view text) {
  Monomial out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string_view field = text.substr(pos, comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    int label = 0;
    const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), label);
    if (field.empty() || ec != std::errc() || end != field.data() + field.size() ||
        label < 1) {
      throw std::invalid_argument("monomial '" + std::string(text) +
                                  "': labels must be positive integers");
    }
    out.push_back(label);
    pos = comma + 1;
  }
  return out;
}

std::string to_string(const Monomial& monomial) {
  std::string out;
  for (std::size_t i = 0; i < monomial.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(monomial[i]);
  }
  return out;
}

std::uint64_t label_seed(std::uint64_t master_seed, std::size_t rep, int label) {
  return derive_seed(derive_seed(master_seed, rep), static_cast<std::uint64_t>(label),
                     Stream::Labels);
}

namespace {

Eigen::MatrixXd chain(const Monomial& m, std::size_t from, std::size_t to,
                      const std::vector<const Eigen::MatrixXd*>& mats) {
  Eigen::MatrixXd out = *mats[static_cast<std::size_t>(m[from] - 1)];
  for (std::size_t i = from + 1; i < to; ++i) {
    out = out * *mats[static_cast<std::size_t>(m[i] - 1)];
  }
  return out;
}

// A rotation r of an even-length monomial whose halves mirror each other,
// so that Tr = ||X||_F^2 for the product X of the first half.
std::optional<std::size_t> mirrored_rotation(const Monomial& m) {
  const std::size_t len = m.size();
  if (len % 2 != 0) return std::nullopt;
  for (std::size_t r = 0; r < len; ++r) {
    bool ok = true;
    for (std::size_t i = 0; i < len / 2 && ok; ++i) {
      ok = m[(r + i) % len] == m[(r + len - 1 - i) % len];
    }
    if (ok) return r;
  }
  return std::nullopt;
}

}  // namespace

double normalized_trace(const Monomial& monomial,
                        const std::vector<const Eigen::MatrixXd*>& mats) {
  if (monomial.empty()) throw std::invalid_argument("normalized_trace: empty monomial");
  for (int l : monomial) {
    if (l < 1 || static_cast<std::size_t>(l) > mats.size()) {
      throw std::invalid_argument("normalized_trace: label without a matrix");
    }
  }
  const double n = static_cast<double>(mats.front()->rows());
  const std::size_t len = monomial.size();
  const double scale = std::pow(n, 1.0 + 0.5 * static_cast<double>(len));
  double trace = 0.0;
  if (len == 1) {
    trace = mats[static_cast<std::size_t>(monomial[0] - 1)]->trace();
  } else if (const auto r = mirrored_rotation(monomial)) {
    Monomial rotated(len);
    for (std::size_t i = 0; i < len; ++i) rotated[i] = monomial[(*r + i) % len];
    trace = chain(rotated, 0, len / 2, mats).squaredNorm();
  } else {
    const std::size_t mid = len / 2;
    const Eigen::MatrixXd x = chain(monomial, 0, mid, mats);
    const Eigen::MatrixXd y = chain(monomial, mid, len, mats);
    trace = x.cwiseProduct(y.transpose()).sum();
  }
  return trace / scale;
}

JointEstimate joint_moment(const Monomial& monomial,
                           const std::vector<LabelEnsemble>& ensembles,
                           std::size_t n, InputDistribution dist,
                           std::size_t reps, std::uint64_t master_seed,
                           std::size_t workers) {
  if (reps < 2) throw std::invalid_argument("joint_moment: reps must be >= 2");
  if (monomial.empty()) throw std::invalid_argument("joint_moment: empty monomial");
  const int labels = *std::max_element(monomial.begin(), monomial.end());
  if (static_cast<std::size_t>(labels) > ensembles.size()) {
    throw std::invalid_argument("joint_moment: monomial uses label " +
                                std::to_string(labels) + " but only " +
                                std::to_string(ensembles.size()) +
                                " ensembles are declared");
  }
  JointEstimate out;
  out.monomial = monomial;
  out.n = n;
  out.reps = reps;
  out.per_rep = parallel_map(reps, workers, [&](std::size_t r) {
    std::vector<MatrixDraw> draws;
    draws.reserve(static_cast<std::size_t>(labels));
    for (int l = 1; l <= labels; ++l) {
      const LabelEnsemble& e = ensembles[static_cast<std::size_t>(l - 1)];
      draws.push_back(build_patterned(e.pattern, e.region, n, dist,
                                      label_seed(master_seed, r, l)));
    }
    std::vector<const Eigen::MatrixXd*> mats;
    for (const auto& d : draws) mats.push_back(&d.entries);
    return normalized_trace(monomial, mats);
  });
  std::vector<std::vector<double>> rows;
  for (double v : out.per_rep) rows.push_back({v});
  const MomentEstimate s = summarize_moments(rows).front();
  out.mean = s.mean;
  out.std_error = s.std_error;
  return out;
}

FreenessReport freeness_report(std::size_t n, std::size_t reps,
                               std::uint64_t master_seed, bool full_control,
                               InputDistribution dist, std::size_t workers) {
  if (reps < 2) throw std::invalid_argument("freeness_report: reps must be >= 2");
  const Region region = full_control ? Region::Full : Region::UpperAnti;
  const double nd = static_cast<double>(n);
  // Per replicate: phi(a^2), phi(b^2), phi(a^2 b^2) = ||AB||_F^2 / n^3.
  const auto rows = parallel_map(reps, workers, [&](std::size_t r) {
    const MatrixDraw a = build_patterned(PatternKind::Wigner, region, n, dist,
                                         label_seed(master_seed, r, 1));
    const MatrixDraw b = build_patterned(PatternKind::Wigner, region, n, dist,
                                         label_seed(master_seed, r, 2));
    const double pa = a.entries.squaredNorm() / (nd * nd);
    const double pb = b.entries.squaredNorm() / (nd * nd);
    const Eigen::MatrixXd ab = a.entries * b.entries;
    const double pab = ab.squaredNorm() / (nd * nd * nd);
    return std::vector<double>{pa, pb, pab, pab - pa * pb};
  });
  const auto s = summarize_moments(rows);
  FreenessReport out;
  out.n = n;
  out.reps = reps;
  out.full_control = full_control;
  out.a2 = {2, s[0].mean, s[0].std_error, reps};
  out.b2 = {2, s[1].mean, s[1].std_error, reps};
  out.a2b2 = {4, s[2].mean, s[2].std_error, reps};
  out.product = out.a2.mean * out.b2.mean;
  out.gap = s[3].mean;
  out.gap_std_error = s[3].std_error;
  out.target_gap = full_control ? 0.0 : 1.0 / 12.0;
  // Five sigma read as a tail probability, so few replicates cannot flag on
  // a noisy standard error.
  const double tail = boost::math::cdf(boost::math::complement(boost::math::normal(), 5.0));
  out.flag_threshold = boost::math::quantile(boost::math::complement(
      boost::math::students_t(static_cast<double>(reps - 1)), tail));
  out.non_free = out.gap > out.flag_threshold * out.gap_std_error;
  return out;
}

std::string_view to_string(Wiring wiring) {
  return wiring == Wiring::SharedFullWigner ? "shared" : "independent";
}

Wiring parse_wiring(std::string_view name) {
  if (name == "shared") return Wiring::SharedFullWigner;
  if (name == "independent") return Wiring::Independent;
  throw std::invalid_argument("unknown wiring '" + std::string(name) +
                              "' (expected shared|independent)");
}

SemicircleReport sum_semicircle_check(std::size_t n, std::size_t reps,
                                      std::uint64_t master_seed, Wiring wiring,
                                      InputDistribution dist, std::size_t workers) {
  if (reps < 2) throw std::invalid_argument("sum_semicircle_check: reps must be >= 2");
  const double nd = static_cast<double>(n);
  const auto rows = parallel_map(reps, workers, [&](std::size_t r) {
    const std::uint64_t su = label_seed(master_seed, r, 1);
    const std::uint64_t sl = wiring == Wiring::SharedFullWigner
                                 ? su
                                 : label_seed(master_seed, r, 2);
    Eigen::MatrixXd s =
        build_patterned(PatternKind::Wigner, Region::UpperAnti, n, dist, su).entries;
    s += build_patterned(PatternKind::Wigner, Region::StrictLowerAnti, n, dist, sl)
             .entries;
    // Tr(S^2k) = ||S^k||_F^2.
    const Eigen::MatrixXd s2 = s * s;
    const Eigen::MatrixXd s3 = s2 * s;
    return std::vector<double>{s.squaredNorm() / (nd * nd),
                               s2.squaredNorm() / (nd * nd * nd),
                               s3.squaredNorm() / (nd * nd * nd * nd)};
  });
  const auto s = summarize_moments(rows);
  SemicircleReport out;
  out.wiring = wiring;
  out.n = n;
  out.reps = reps;
  for (std::size_t i = 0; i < s.size(); ++i) {
    out.moments.push_back({2 * (i + 1), s[i].mean, s[i].std_error, reps});
  }
  out.asserted = wiring == Wiring::SharedFullWigner;
  out.passed = true;
  for (std::size_t i = 0; i < out.moments.size(); ++i) {
    if (std::abs(out.moments[i].mean - out.targets[i]) >= out.tolerances[i]) {
      out.passed = false;
    }
  }
  return out;
}

}  // namespace trilsd
