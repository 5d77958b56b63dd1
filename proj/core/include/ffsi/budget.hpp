// Copyright 2026 The ffsi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FFSI_BUDGET_HPP
#define FFSI_BUDGET_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ffsi {

/// Raised when an exhaustive routine would exceed its enumeration budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised on precondition violations (non-prime p, degree mismatch, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an internal self-check fails. Always an implementation bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Saturating integer power; returns UINT64_MAX on overflow.
std::uint64_t checked_pow(std::uint64_t base, unsigned exponent) noexcept;

/// Upper limit on the number of items an exhaustive enumeration may visit.
///
/// Every routine in the library is exhaustive, so the budget is checked at
/// operation entry and the call fails fast instead of hanging.
struct Budget {
  static constexpr std::uint64_t kDefaultLimit = std::uint64_t{1} << 20;

  std::uint64_t limit = kDefaultLimit;

  /// Default limit, overridden by the FFSI_BUDGET environment variable.
  static Budget standard();

  bool allows(std::uint64_t work) const noexcept { return work <= limit; }

  /// Throws BudgetExceeded naming `what` when `work` exceeds the limit.
  void require(std::uint64_t work, std::string_view what) const;
};

}  // namespace ffsi

#endif  // FFSI_BUDGET_HPP
