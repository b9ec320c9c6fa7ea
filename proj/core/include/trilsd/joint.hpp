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


#ifndef TRILSD_JOINT_HPP_
#define TRILSD_JOINT_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "trilsd/ensembles.hpp"
#include "trilsd/patterns.hpp"
#include "trilsd/spectra.hpp"

namespace trilsd {

/// Labels 1..p; (1,1,2,2) stands for a1 a1 a2 a2.
using Monomial = std::vector<int>;

/// Parses "1,1,2,2". Throws std::invalid_argument on empty input or labels < 1.
Monomial parse_monomial(std::string_view text);
std::string to_string(const Monomial& monomial);

struct LabelEnsemble {
  PatternKind pattern = PatternKind::Wigner;
  Region region = Region::UpperAnti;
};

struct JointEstimate {
  Monomial monomial;
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t n = 0;
  std::size_t reps = 0;
  std::vector<double> per_rep;
};

/// Seed of label l (1-based) in replicate r.
std::uint64_t label_seed(std::uint64_t master_seed, std::size_t rep, int label);

/// (1/n) Tr(prod_l A_l / sqrt(n)) for a fixed tuple of unscaled symmetric
/// matrices, mats[label - 1].
double normalized_trace(const Monomial& monomial,
                        const std::vector<const Eigen::MatrixXd*>& mats);

/// Monte Carlo mean of the normalized trace over independent draws.
/// ensembles[l - 1] describes label l. Throws std::invalid_argument if a
/// label has no ensemble or reps < 2.
JointEstimate joint_moment(const Monomial& monomial,
                           const std::vector<LabelEnsemble>& ensembles,
                           std::size_t n, InputDistribution dist,
                           std::size_t reps, std::uint64_t master_seed,
                           std::size_t workers = 0);

struct FreenessReport {
  std::size_t n = 0;
  std::size_t reps = 0;
  bool full_control = false;
  MomentEstimate a2;    ///< phi(a1^2)
  MomentEstimate b2;    ///< phi(a2^2)
  MomentEstimate a2b2;  ///< phi(a1^2 a2^2)
  double product = 0.0;  ///< a2.mean * b2.mean
  /// Mean and standard error of the per-replicate c_r - a_r b_r.
  double gap = 0.0;
  double gap_std_error = 0.0;
  double target_gap = 0.0;  ///< 1/12 triangular, 0 for the control
  /// Student-t quantile with reps - 1 degrees of freedom at the one-sided
  /// normal 5 sigma tail; tends to 5 as reps grows.
  double flag_threshold = 5.0;
  bool non_free = false;  ///< gap > flag_threshold standard errors
};

/// Compares phi(a1^2 a2^2) with phi(a1^2) phi(a2^2) for two independent
/// triangular Wigner matrices, or full ones when `full_control`.
FreenessReport freeness_report(std::size_t n, std::size_t reps,
                               std::uint64_t master_seed,
                               bool full_control = false,
                               InputDistribution dist = InputDistribution::StandardGaussian,
                               std::size_t workers = 0);

/// SharedFullWigner splits one full Wigner draw into its part on and above
/// the anti-diagonal and the strict remainder, so the sum is the full draw.
/// Independent takes the two parts from unrelated draws.
enum class Wiring { SharedFullWigner, Independent };

std::string_view to_string(Wiring wiring);
Wiring parse_wiring(std::string_view name);

struct SemicircleReport {
  Wiring wiring = Wiring::SharedFullWigner;
  std::size_t n = 0;
  std::size_t reps = 0;
  std::vector<MomentEstimate> moments;  ///< k = 2, 4, 6 of (W^u + W^l)/sqrt(n)
  std::vector<double> targets{1.0, 2.0, 5.0};
  std::vector<double> tolerances{0.02, 0.05, 0.2};
  bool asserted = false;  ///< only the shared wiring is checked
  bool passed = false;
};

SemicircleReport sum_semicircle_check(std::size_t n, std::size_t reps,
                                      std::uint64_t master_seed, Wiring wiring,
                                      InputDistribution dist = InputDistribution::StandardGaussian,
                                      std::size_t workers = 0);

}  // namespace trilsd

#endif  // TRILSD_JOINT_HPP_
