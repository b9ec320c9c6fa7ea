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

#ifndef TRILSD_ERRORS_HPP_
#define TRILSD_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace trilsd {

// Index arguments outside 1..n use std::out_of_range, inputs outside an
// operation's mathematical domain use std::domain_error and malformed shapes
// use std::invalid_argument. The two types below cover the remaining cases.

/// Raised when a requested enumeration or count exceeds its configured cap.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an argument violates a numerical precondition (for example a
/// matrix handed to the symmetric eigensolver that is not symmetric).
class ContractViolation : public std::invalid_argument {
 public:
  explicit ContractViolation(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace trilsd

#endif  // TRILSD_ERRORS_HPP_
