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

#include "trilsd/patterns.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace trilsd {
namespace {

void check_index(std::size_t i, std::size_t n, const char* name) {
  if (i < 1 || i > n) {
    throw std::out_of_range(std::string("pattern index ") + name + "=" +
                            std::to_string(i) + " outside 1.." +
                            std::to_string(n));
  }
}

}  // namespace

LinkValue link_value(PatternKind pattern, std::size_t i, std::size_t j,
                     std::size_t n) {
  check_index(i, n, "i");
  check_index(j, n, "j");
  return link_value_unchecked(pattern, static_cast<std::int64_t>(i),
                              static_cast<std::int64_t>(j),
                              static_cast<std::int64_t>(n));
}

std::uint64_t link_index(PatternKind pattern, LinkValue value) {
  if (pattern == PatternKind::Wigner) {
    const auto a = static_cast<std::uint64_t>(value.first);
    const auto b = static_cast<std::uint64_t>(value.second);
    return b * (b - 1) / 2 + a;
  }
  return static_cast<std::uint64_t>(value.first);
}

bool in_triangle(std::size_t i, std::size_t j, std::size_t n) {
  check_index(i, n, "i");
  check_index(j, n, "j");
  return i + j <= n + 1;
}

std::size_t delta_bound(PatternKind pattern, std::size_t n) {
  const auto sn = static_cast<std::int64_t>(n);
  std::size_t best = 0;
  std::vector<LinkValue> row;
  row.reserve(n);
  for (std::int64_t k = 1; k <= sn; ++k) {
    row.clear();
    for (std::int64_t l = 1; k + l <= sn + 1; ++l) {
      row.push_back(link_value_unchecked(pattern, k, l, sn));
    }
    std::sort(row.begin(), row.end());
    for (std::size_t a = 0; a < row.size();) {
      std::size_t b = a;
      while (b < row.size() && row[b] == row[a]) ++b;
      best = std::max(best, b - a);
      a = b;
    }
  }
  return best;
}

std::size_t property_p_bound(PatternKind pattern, std::size_t n) {
  const auto sn = static_cast<std::int64_t>(n);
  std::size_t best = 0;
  // The count is symmetric in (i, j), so i < j suffices.
  for (std::int64_t i = 1; i <= sn; ++i) {
    for (std::int64_t j = i + 1; j <= sn; ++j) {
      std::size_t count = 0;
      for (std::int64_t k = 1; k + j <= sn + 1; ++k) {
        if (link_value_unchecked(pattern, k, i, sn) ==
            link_value_unchecked(pattern, k, j, sn)) {
          ++count;
        }
      }
      best = std::max(best, count);
    }
  }
  return best;
}

std::string_view to_string(PatternKind pattern) {
  switch (pattern) {
    case PatternKind::Wigner:
      return "wigner";
    case PatternKind::Hankel:
      return "hankel";
    case PatternKind::Toeplitz:
      return "toeplitz";
    case PatternKind::SymmetricCirculant:
      return "symcirc";
  }
  return "unknown";
}

PatternKind parse_pattern(std::string_view name) {
  if (name == "wigner") return PatternKind::Wigner;
  if (name == "hankel" || name == "revcirc") return PatternKind::Hankel;
  if (name == "toeplitz") return PatternKind::Toeplitz;
  if (name == "symcirc") return PatternKind::SymmetricCirculant;
  throw std::invalid_argument("unknown pattern '" + std::string(name) + "'");
}

}  // namespace trilsd
