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


// Circuit counting at sizes too large for the unit suite.

#include <gtest/gtest.h>

#include <array>
#include <cmath>

#include "trilsd/volume.hpp"
#include "trilsd/words.hpp"

namespace trilsd {
namespace {

TEST(HankelConsistency, GridAgreesWithCountExtrapolation) {
  const std::array<std::size_t, 3> n_list{40, 80, 160};
  for (std::size_t k = 1; k <= 3; ++k) {
    for (const Word& w : enumerate_symmetric(k)) {
      const PuValue grid = pu_grid_hankel(w, 160);
      const PuValue count = pu_estimate(PatternKind::Hankel, w, n_list);
      EXPECT_LE(std::abs(grid.value() - count.value()), grid.error_bar + count.error_bar + 1e-3) << w.str();
    }
  }
}

TEST(WignerDecay, NonCatalanWordsVanish) {
  for (std::size_t k = 2; k <= 3; ++k) {
    for (const Word& w : enumerate_pair_matched(k)) {
      if (is_catalan(w)) continue;
      double previous = INFINITY;
      for (std::size_t n : {16u, 32u, 64u}) {
        const double scaled = static_cast<double>(count_circuits(PatternKind::Wigner, w, n, true)) /
                              std::pow(static_cast<double>(n), static_cast<double>(k + 1));
        EXPECT_LT(scaled, previous) << w.str() << " n=" << n;
        previous = scaled;
      }
      EXPECT_LT(previous, 0.1) << w.str();
    }
  }
}

TEST(WignerDecay, CatalanWordsMatchExactValues) {
  const std::array<std::size_t, 3> n_list{40, 80, 160};
  for (std::size_t k = 1; k <= 3; ++k) {
    for (const Word& w : enumerate_catalan(k)) {
      const PuValue est = pu_estimate(PatternKind::Wigner, w, n_list);
      EXPECT_NEAR(est.value(), pu_exact_wigner(w).get_d(), est.error_bar + 1e-3) << w.str();
    }
  }
}

}  // namespace
}  // namespace trilsd
