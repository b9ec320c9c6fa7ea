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


#ifndef TRILSD_ACCEPTANCE_HPP_
#define TRILSD_ACCEPTANCE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "trilsd/rng.hpp"

namespace trilsd {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct AcceptanceOptions {
  std::uint64_t seed = kDefaultSeed;
  std::size_t workers = 0;
};

/// Ids 1..15 are the acceptance criteria; 16 is the supplementary
/// variance-decay check for the m2 estimator.
std::vector<int> criterion_ids();
std::string criterion_name(int id);

/// Runs the selected criteria (all when `ids` is empty) in ascending order.
/// Expensive Monte Carlo runs are shared between criteria that need them.
/// An exception inside a criterion is reported as a failure. `on_result`,
/// when set, sees each result as soon as it is available.
std::vector<CriterionResult> run_acceptance(
    const AcceptanceOptions& options, std::span<const int> ids = {},
    const std::function<void(const CriterionResult&)>& on_result = {});

/// "[PASS]  4  name (1.2 s): detail"
std::string format_result(const CriterionResult& result);

}  // namespace trilsd

#endif  // TRILSD_ACCEPTANCE_HPP_
