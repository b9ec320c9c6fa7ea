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

#include "trilsd/ensembles.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "trilsd/rng.hpp"

namespace trilsd {
namespace {

constexpr std::uint64_t kSeedTag = 0x656E73656D626C65ULL;

PhiloxCounter input_block(std::uint64_t seed, std::uint64_t t, Stream stream) {
  return philox4x64_10({t, static_cast<std::uint64_t>(stream), 0, 0},
                       {seed, kSeedTag});
}

}  // namespace

std::string_view to_string(InputDistribution dist) {
  switch (dist) {
    case InputDistribution::StandardGaussian:
      return "gaussian";
    case InputDistribution::Rademacher:
      return "rademacher";
    case InputDistribution::UniformScaled:
      return "uniform";
  }
  return "unknown";
}

InputDistribution parse_distribution(std::string_view name) {
  if (name == "gaussian") return InputDistribution::StandardGaussian;
  if (name == "rademacher") return InputDistribution::Rademacher;
  if (name == "uniform") return InputDistribution::UniformScaled;
  throw std::invalid_argument("unknown distribution '" + std::string(name) +
                              "'");
}

std::string_view to_string(Region region) {
  switch (region) {
    case Region::Full:
      return "full";
    case Region::UpperAnti:
      return "upper";
    case Region::LowerAnti:
      return "lower";
    case Region::StrictLowerAnti:
      return "strict-lower";
  }
  return "unknown";
}

Region parse_region(std::string_view name) {
  if (name == "full") return Region::Full;
  if (name == "upper") return Region::UpperAnti;
  if (name == "lower") return Region::LowerAnti;
  if (name == "strict-lower") return Region::StrictLowerAnti;
  throw std::invalid_argument("unknown region '" + std::string(name) + "'");
}

double input_value(InputDistribution dist, std::uint64_t seed,
                   std::uint64_t t) {
  const PhiloxCounter block = input_block(seed, t, Stream::Inputs);
  switch (dist) {
    case InputDistribution::StandardGaussian:
      return box_muller(block[0], block[1]).first;
    case InputDistribution::Rademacher:
      return (block[0] >> 63) != 0 ? 1.0 : -1.0;
    case InputDistribution::UniformScaled:
      return std::sqrt(3.0) * (2.0 * to_unit_closed_open(block[0]) - 1.0);
  }
  return 0.0;
}

std::vector<double> sample_inputs(InputDistribution dist, std::size_t count,
                                  std::uint64_t seed) {
  std::vector<double> out(count);
  for (std::size_t t = 0; t < count; ++t) out[t] = input_value(dist, seed, t);
  return out;
}

MatrixDraw build_patterned(PatternKind pattern, Region region, std::size_t n,
                           InputDistribution dist, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("matrix size must be at least 1");
  MatrixDraw draw;
  draw.pattern = pattern;
  draw.region = region;
  draw.n = n;
  draw.dist = dist;
  draw.seed = seed;
  draw.entries = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                       static_cast<Eigen::Index>(n));
  const auto sn = static_cast<std::int64_t>(n);

  // Scalar links take at most 2n + 1 values; draw each once.
  std::vector<double> scalar_inputs;
  if (pattern != PatternKind::Wigner) {
    scalar_inputs.resize(2 * n + 2);
    for (std::size_t t = 0; t < scalar_inputs.size(); ++t) {
      scalar_inputs[t] = input_value(dist, seed, t);
    }
  }

  for (std::int64_t j = 1; j <= sn; ++j) {
    for (std::int64_t i = 1; i <= j; ++i) {
      if (!in_region(region, static_cast<std::size_t>(i),
                     static_cast<std::size_t>(j), n)) {
        continue;
      }
      const LinkValue link = link_value_unchecked(pattern, i, j, sn);
      const std::uint64_t t = link_index(pattern, link);
      const double x = pattern == PatternKind::Wigner
                           ? input_value(dist, seed, t)
                           : scalar_inputs[t];
      draw.entries(i - 1, j - 1) = x;
      draw.entries(j - 1, i - 1) = x;
    }
  }
  return draw;
}

MatrixDraw build_triangular(PatternKind pattern, std::size_t n,
                            InputDistribution dist, std::uint64_t seed) {
  return build_patterned(pattern, Region::UpperAnti, n, dist, seed);
}

MatrixDraw build_lower_anti(std::size_t n, InputDistribution dist,
                            std::uint64_t seed) {
  return build_patterned(PatternKind::Wigner, Region::LowerAnti, n, dist, seed);
}

MatrixDraw build_full(PatternKind pattern, std::size_t n,
                      InputDistribution dist, std::uint64_t seed) {
  return build_patterned(pattern, Region::Full, n, dist, seed);
}

ComplexMatrixDraw build_asym_upper(std::size_t n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("matrix size must be at least 1");
  ComplexMatrixDraw draw;
  draw.n = n;
  draw.seed = seed;
  const auto sz = static_cast<Eigen::Index>(n);
  draw.entries = Eigen::MatrixXcd::Zero(sz, sz);
  // Real and imaginary parts each carry variance 1/(2n).
  const double scale = std::sqrt(0.5 / static_cast<double>(n));
  for (Eigen::Index j = 0; j < sz; ++j) {
    for (Eigen::Index i = 0; i <= j; ++i) {
      const auto t = static_cast<std::uint64_t>(j) * n + static_cast<std::uint64_t>(i);
      const PhiloxCounter block = input_block(seed, t, Stream::AsymEntries);
      const auto [re, im] = box_muller(block[0], block[1]);
      draw.entries(i, j) = {scale * re, scale * im};
    }
  }
  return draw;
}

std::size_t distinct_link_count(PatternKind pattern, Region region,
                                std::size_t n) {
  std::set<LinkValue> seen;
  const auto sn = static_cast<std::int64_t>(n);
  for (std::int64_t i = 1; i <= sn; ++i) {
    for (std::int64_t j = i; j <= sn; ++j) {
      if (in_region(region, static_cast<std::size_t>(i),
                    static_cast<std::size_t>(j), n)) {
        seen.insert(link_value_unchecked(pattern, i, j, sn));
      }
    }
  }
  return seen.size();
}

}  // namespace trilsd
