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

#include <gtest/gtest.h>

#include <cmath>

#include "trilsd/errors.hpp"

namespace trilsd {
namespace {

TEST(Eigenvalues, SortedSmallCases) {
  Eigen::MatrixXd d = Eigen::Vector3d(3, 1, 2).asDiagonal();
  EXPECT_EQ(eigenvalues(d), (std::vector<double>{1, 2, 3}));
  Eigen::MatrixXd c(1, 1);
  c(0, 0) = -2.5;
  EXPECT_EQ(eigenvalues(c), (std::vector<double>{-2.5}));
}

TEST(Eigenvalues, RejectsAsymmetricInput) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(2, 2);
  a(0, 1) = 1.0;
  EXPECT_THROW(eigenvalues(a), ContractViolation);
  EXPECT_THROW(eigenvalues(Eigen::MatrixXd(2, 3)), std::invalid_argument);
}

TEST(Eigenvalues, ReconstructionResidual) {
  const auto d = build_full(PatternKind::Wigner, 60, InputDistribution::StandardGaussian, 3);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> s(d.entries);
  const Eigen::MatrixXd r = s.eigenvectors() * s.eigenvalues().asDiagonal() *
                            s.eigenvectors().transpose();
  EXPECT_LE((r - d.entries).norm(), 1e-8 * d.entries.norm());
  const auto ev = eigenvalues(d.entries);
  for (std::size_t i = 0; i < ev.size(); ++i) EXPECT_NEAR(ev[i], s.eigenvalues()(static_cast<Eigen::Index>(i)), 1e-10);
}

TEST(Eigenvalues, InvariantUnderFlipConjugation) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto d = build_full(PatternKind::Toeplitz, 50, InputDistribution::StandardGaussian, seed);
    const auto a = eigenvalues(d.entries);
    const auto b = eigenvalues(flip_conjugate(d.entries));
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-8);
  }
}

TEST(SampleSpectrum, ScaledTraceIdentity) {
  const std::size_t n = 80;
  const auto d = build_triangular(PatternKind::Hankel, n, InputDistribution::UniformScaled, 9);
  const SpectrumSample s = sample_spectrum(d);
  ASSERT_EQ(s.eigenvalues.size(), n);
  EXPECT_TRUE(std::is_sorted(s.eigenvalues.begin(), s.eigenvalues.end()));
  const double m1 = empirical_moments(s, 1)[0];
  const double trace = d.entries.trace() / std::sqrt(static_cast<double>(n));
  EXPECT_NEAR(m1 * static_cast<double>(n), trace, 1e-8 * std::max(1.0, std::abs(trace)));
}

TEST(Moments, TrivialSpectra) {
  const std::vector<double> zeros(5, 0.0);
  for (double m : power_moments(zeros, 4)) EXPECT_EQ(m, 0.0);
  const std::vector<double> one{1.5};
  const auto m = power_moments(one, 3);
  EXPECT_DOUBLE_EQ(m[0], 1.5);
  EXPECT_DOUBLE_EQ(m[1], 2.25);
  EXPECT_DOUBLE_EQ(m[2], 3.375);
}

TEST(SingularMoments, ZeroMatrixAndAgreement) {
  ComplexMatrixDraw z;
  z.n = 4;
  z.entries = Eigen::MatrixXcd::Zero(4, 4);
  for (double m : singular_moments(z, 3)) EXPECT_EQ(m, 0.0);
  const auto t = build_asym_upper(40, 11);
  const auto direct = singular_moments(t, 3);
  const auto via_eigs = empirical_moments(sample_singular_spectrum(t), 3);
  for (std::size_t k = 0; k < 3; ++k) EXPECT_NEAR(direct[k], via_eigs[k], 1e-10);
}

TEST(Summaries, MeanAndStandardError) {
  const auto s = summarize_moments({{1.0, 2.0}, {3.0, 2.0}});
  ASSERT_EQ(s.size(), 2u);
  EXPECT_DOUBLE_EQ(s[0].mean, 2.0);
  EXPECT_DOUBLE_EQ(s[0].std_error, 1.0);
  EXPECT_DOUBLE_EQ(s[1].std_error, 0.0);
  EXPECT_EQ(s[1].k, 2u);
}

TEST(Replicates, IndependentOfWorkerCount) {
  SpectralEnsemble e;
  const auto one = run_replicates(e, 60, InputDistribution::StandardGaussian, 4, 6, 123, 1);
  const auto four = run_replicates(e, 60, InputDistribution::StandardGaussian, 4, 6, 123, 4);
  EXPECT_EQ(one.per_rep_moments, four.per_rep_moments);
  for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(one.moments[k].mean, four.moments[k].mean);
}

TEST(Replicates, MonteCarloNeedsTwoReps) {
  EXPECT_THROW(monte_carlo_moments(PatternKind::Wigner, 10, InputDistribution::Rademacher, 2, 1, 1),
               std::invalid_argument);
}

TEST(Histogram, UnitMassAtZero) {
  const std::vector<double> zeros(10, 0.0);
  const Histogram h = histogram(zeros, 1, -1.0, 1.0);
  ASSERT_EQ(h.density.size(), 1u);
  EXPECT_DOUBLE_EQ(h.density[0], 0.5);  // all mass over a width-2 bin
  EXPECT_EQ(h.inside, 10u);
}

TEST(Histogram, IntegratesToInsideFraction) {
  const std::vector<double> v{-5, -0.5, 0, 0.25, 1, 3};
  const Histogram h = histogram(v, 4, -1.0, 1.0);
  double mass = 0.0;
  for (std::size_t b = 0; b < h.density.size(); ++b) mass += h.density[b] * (h.edges[b + 1] - h.edges[b]);
  EXPECT_NEAR(mass, 4.0 / 6.0, 1e-12);
  EXPECT_THROW(histogram(v, 0, -1.0, 1.0), std::invalid_argument);
  EXPECT_THROW(histogram(v, 3, 1.0, 1.0), std::invalid_argument);
}

TEST(Ensembles, Names) {
  EXPECT_TRUE(parse_ensemble("asym-gauss").asym_gaussian);
  EXPECT_EQ(parse_ensemble("toeplitz").pattern, PatternKind::Toeplitz);
  EXPECT_EQ(ensemble_name(parse_ensemble("symcirc")), "symcirc");
}

}  // namespace
}  // namespace trilsd
