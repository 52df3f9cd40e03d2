// Copyright 2026 The qutrit-harvest Authors
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

#ifndef HARVEST_ERROR_HPP_
#define HARVEST_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace harvest {

/// Raised when a caller breaks a documented precondition.
class contract_violation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a numerical routine cannot meet its accuracy contract.
/// `estimate` carries the best error estimate (or offending magnitude)
/// achieved before giving up.
class numeric_failure : public std::runtime_error {
 public:
  numeric_failure(const std::string &what, double estimate)
      : std::runtime_error(what), estimate_(estimate) {}

  double estimate() const noexcept { return estimate_; }

 private:
  double estimate_;
};

}  // namespace harvest

#endif  // HARVEST_ERROR_HPP_
