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

#ifndef TRILSD_EXTRAPOLATION_HPP_
#define TRILSD_EXTRAPOLATION_HPP_

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace trilsd {

struct Extrapolation {
  double estimate = 0.0;
  /// Heuristic: |last two extrapolants differ| + |raw value at the largest
  /// size - estimate|. Not a confidence interval.
  double error_bar = 0.0;
  std::vector<double> extrapolants;
};

/// Richardson extrapolation for a sequence with leading error c/n. For each
/// consecutive pair (n1, p1), (n2, p2) the extrapolant is
/// (n2 p2 - n1 p1) / (n2 - n1), which is 2 p2 - p1 when n2 = 2 n1.
/// Needs at least three strictly increasing sizes.
inline Extrapolation richardson_first_order(std::span<const std::size_t> sizes,
                                            std::span<const double> values) {
  if (sizes.size() != values.size() || sizes.size() < 3) {
    throw std::invalid_argument("richardson: need >= 3 (size, value) pairs");
  }
  Extrapolation out;
  for (std::size_t i = 0; i + 1 < sizes.size(); ++i) {
    if (sizes[i + 1] <= sizes[i]) {
      throw std::invalid_argument("richardson: sizes must increase");
    }
    const double n1 = static_cast<double>(sizes[i]);
    const double n2 = static_cast<double>(sizes[i + 1]);
    out.extrapolants.push_back((n2 * values[i + 1] - n1 * values[i]) / (n2 - n1));
  }
  const std::size_t e = out.extrapolants.size();
  out.estimate = out.extrapolants[e - 1];
  out.error_bar = std::abs(out.extrapolants[e - 1] - out.extrapolants[e - 2]) +
                  std::abs(values.back() - out.estimate);
  return out;
}

}  // namespace trilsd

#endif  // TRILSD_EXTRAPOLATION_HPP_
