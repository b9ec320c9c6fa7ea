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

// Eigenvalues, empirical spectral distributions and Monte Carlo trace moments.

#ifndef TRILSD_SPECTRA_HPP_
#define TRILSD_SPECTRA_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "trilsd/ensembles.hpp"
#include "trilsd/patterns.hpp"

namespace trilsd {

/// What a replicate draws: a symmetric patterned matrix restricted to a
/// region, or the asymmetric complex Gaussian T_n.
struct SpectralEnsemble {
  bool asym_gaussian = false;
  PatternKind pattern = PatternKind::Wigner;
  Region region = Region::UpperAnti;
};

/// "asym-gauss" or any pattern name accepted by parse_pattern.
SpectralEnsemble parse_ensemble(std::string_view name,
                                Region region = Region::UpperAnti);
std::string ensemble_name(const SpectralEnsemble& ensemble);

struct SampleMeta {
  SpectralEnsemble ensemble;
  std::size_t n = 0;
  InputDistribution dist = InputDistribution::StandardGaussian;
  std::uint64_t seed = 0;
};

/// Sorted spectrum of one scaled draw: eigenvalues of A / sqrt(n) for the
/// symmetric ensembles, squared singular values of T for asym-gauss.
struct SpectrumSample {
  std::vector<double> eigenvalues;
  SampleMeta meta;
};

struct MomentEstimate {
  std::size_t k = 0;
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t reps = 0;
};

/// Full ascending spectrum of a symmetric matrix. Throws ContractViolation if
/// some |A(i,j) - A(j,i)| exceeds 1e-12.
std::vector<double> eigenvalues(const Eigen::MatrixXd& a);

/// Eigenvalues of draw.entries / sqrt(n).
SpectrumSample sample_spectrum(const MatrixDraw& draw);

/// Eigenvalues of T^* T, i.e. the squared singular values of T.
SpectrumSample sample_singular_spectrum(const ComplexMatrixDraw& draw);

/// m_k = (1/len) sum_i values[i]^k for k = 1..k_max.
std::vector<double> power_moments(std::span<const double> values,
                                  std::size_t k_max);

std::vector<double> empirical_moments(const SpectrumSample& sample,
                                      std::size_t k_max);

/// m_k = (1/n) Tr((T^* T)^k); the variance-1/n entries make T^* T the
/// normalised product already.
std::vector<double> singular_moments(const ComplexMatrixDraw& draw,
                                     std::size_t k_max);

/// Per-k mean and standard error over replicate rows (rows[r][k-1]).
std::vector<MomentEstimate> summarize_moments(
    const std::vector<std::vector<double>>& rows);

struct ReplicateRun {
  std::vector<SpectrumSample> samples;  ///< empty unless keep_samples
  std::vector<std::vector<double>> per_rep_moments;
  std::vector<MomentEstimate> moments;
};

/// Draws `reps` replicates with seeds derive_seed(master_seed, r) and
/// reduces them in replicate order.
ReplicateRun run_replicates(const SpectralEnsemble& ensemble, std::size_t n,
                            InputDistribution dist, std::size_t k_max,
                            std::size_t reps, std::uint64_t master_seed,
                            std::size_t workers = 0, bool keep_samples = false);

/// Moment estimates for the triangular version of `pattern`. reps >= 2.
std::vector<MomentEstimate> monte_carlo_moments(PatternKind pattern,
                                                std::size_t n,
                                                InputDistribution dist,
                                                std::size_t k_max,
                                                std::size_t reps,
                                                std::uint64_t master_seed,
                                                std::size_t workers = 0);

struct Histogram {
  std::vector<double> edges;    ///< bins + 1 edges
  std::vector<double> density;  ///< count / (total * width)
  std::size_t total = 0;
  std::size_t inside = 0;
};

/// Density-normalised histogram over [lo, hi]; values equal to hi land in
/// the last bin. Integrates to inside / total.
Histogram histogram(std::span<const double> values, std::size_t bins,
                    double lo, double hi);
Histogram histogram(std::span<const SpectrumSample> samples, std::size_t bins,
                    double lo, double hi);

}  // namespace trilsd

#endif  // TRILSD_SPECTRA_HPP_
