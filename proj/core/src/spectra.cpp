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

#include "trilsd/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "trilsd/errors.hpp"
#include "trilsd/parallel.hpp"
#include "trilsd/rng.hpp"

namespace trilsd {

SpectralEnsemble parse_ensemble(std::string_view name, Region region) {
  SpectralEnsemble e;
  if (name == "asym-gauss") {
    e.asym_gaussian = true;
    return e;
  }
  e.pattern = parse_pattern(name);
  e.region = region;
  return e;
}

std::string ensemble_name(const SpectralEnsemble& ensemble) {
  if (ensemble.asym_gaussian) return "asym-gauss";
  return std::string(to_string(ensemble.pattern));
}

std::vector<double> eigenvalues(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("eigenvalues: matrix is not square");
  }
  if (a.size() > 0 && (a - a.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw ContractViolation("eigenvalues: matrix is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a,
                                                        Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigenvalues: solver did not converge");
  }
  const Eigen::VectorXd& ev = solver.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end());
  return out;
}

SpectrumSample sample_spectrum(const MatrixDraw& draw) {
  SpectrumSample s;
  s.meta.ensemble = {false, draw.pattern, draw.region};
  s.meta.n = draw.n;
  s.meta.dist = draw.dist;
  s.meta.seed = draw.seed;
  s.eigenvalues =
      eigenvalues(draw.entries / std::sqrt(static_cast<double>(draw.n)));
  return s;
}

SpectrumSample sample_singular_spectrum(const ComplexMatrixDraw& draw) {
  SpectrumSample s;
  s.meta.ensemble.asym_gaussian = true;
  s.meta.n = draw.n;
  s.meta.seed = draw.seed;
  const Eigen::MatrixXcd gram = draw.entries.adjoint() * draw.entries;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      gram, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("singular spectrum: solver did not converge");
  }
  const Eigen::VectorXd& ev = solver.eigenvalues();
  s.eigenvalues.assign(ev.data(), ev.data() + ev.size());
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end());
  return s;
}

std::vector<double> power_moments(std::span<const double> values,
                                  std::size_t k_max) {
  std::vector<double> m(k_max, 0.0);
  if (values.empty()) return m;
  for (double x : values) {
    double p = 1.0;
    for (std::size_t k = 0; k < k_max; ++k) {
      p *= x;
      m[k] += p;
    }
  }
  for (double& v : m) v /= static_cast<double>(values.size());
  return m;
}

std::vector<double> empirical_moments(const SpectrumSample& sample,
                                      std::size_t k_max) {
  if (k_max < 1) throw std::invalid_argument("k_max must be at least 1");
  return power_moments(sample.eigenvalues, k_max);
}

std::vector<double> singular_moments(const ComplexMatrixDraw& draw,
                                     std::size_t k_max) {
  if (k_max < 1) throw std::invalid_argument("k_max must be at least 1");
  return power_moments(sample_singular_spectrum(draw).eigenvalues, k_max);
}

std::vector<MomentEstimate> summarize_moments(
    const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) return {};
  const std::size_t k_max = rows.front().size();
  const auto reps = static_cast<double>(rows.size());
  std::vector<MomentEstimate> out(k_max);
  for (std::size_t k = 0; k < k_max; ++k) {
    double sum = 0.0;
    for (const auto& row : rows) sum += row[k];
    const double mean = sum / reps;
    double ss = 0.0;
    for (const auto& row : rows) ss += (row[k] - mean) * (row[k] - mean);
    const double var = rows.size() > 1 ? ss / (reps - 1.0) : 0.0;
    out[k] = {k + 1, mean, std::sqrt(var / reps), rows.size()};
  }
  return out;
}

ReplicateRun run_replicates(const SpectralEnsemble& ensemble, std::size_t n,
                            InputDistribution dist, std::size_t k_max,
                            std::size_t reps, std::uint64_t master_seed,
                            std::size_t workers, bool keep_samples) {
  if (reps < 1) throw std::invalid_argument("reps must be at least 1");
  if (k_max < 1) throw std::invalid_argument("k_max must be at least 1");
  auto samples = parallel_map(reps, workers, [&](std::size_t r) {
    const std::uint64_t seed = derive_seed(master_seed, r);
    if (ensemble.asym_gaussian) {
      SpectrumSample s = sample_singular_spectrum(build_asym_upper(n, seed));
      s.meta.dist = dist;
      return s;
    }
    return sample_spectrum(
        build_patterned(ensemble.pattern, ensemble.region, n, dist, seed));
  });

  ReplicateRun run;
  run.per_rep_moments.reserve(reps);
  for (const auto& s : samples) {
    run.per_rep_moments.push_back(power_moments(s.eigenvalues, k_max));
  }
  run.moments = summarize_moments(run.per_rep_moments);
  if (keep_samples) run.samples = std::move(samples);
  return run;
}

std::vector<MomentEstimate> monte_carlo_moments(PatternKind pattern,
                                                std::size_t n,
                                                InputDistribution dist,
                                                std::size_t k_max,
                                                std::size_t reps,
                                                std::uint64_t master_seed,
                                                std::size_t workers) {
  if (reps < 2) throw std::invalid_argument("monte_carlo_moments: reps >= 2");
  return run_replicates({false, pattern, Region::UpperAnti}, n, dist, k_max,
                        reps, master_seed, workers)
      .moments;
}

Histogram histogram(std::span<const double> values, std::size_t bins,
                    double lo, double hi) {
  if (bins < 1) throw std::invalid_argument("histogram: bins must be >= 1");
  if (!(lo < hi)) throw std::invalid_argument("histogram: need lo < hi");
  Histogram h;
  h.edges.resize(bins + 1);
  const double width = (hi - lo) / static_cast<double>(bins);
  for (std::size_t b = 0; b <= bins; ++b) {
    h.edges[b] = lo + width * static_cast<double>(b);
  }
  h.edges[bins] = hi;
  std::vector<std::size_t> counts(bins, 0);
  for (double x : values) {
    if (x < lo || x > hi) continue;
    auto b = static_cast<std::size_t>((x - lo) / width);
    if (b >= bins) b = bins - 1;
    ++counts[b];
    ++h.inside;
  }
  h.total = values.size();
  h.density.assign(bins, 0.0);
  if (h.total > 0) {
    for (std::size_t b = 0; b < bins; ++b) {
      h.density[b] = static_cast<double>(counts[b]) /
                     (static_cast<double>(h.total) * width);
    }
  }
  return h;
}

Histogram histogram(std::span<const SpectrumSample> samples, std::size_t bins,
                    double lo, double hi) {
  std::vector<double> all;
  for (const auto& s : samples) {
    all.insert(all.end(), s.eigenvalues.begin(), s.eigenvalues.end());
  }
  return histogram(all, bins, lo, hi);
}

}  // namespace trilsd
