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

#include "ffsi/budget.hpp"

#include <charconv>
#include <cstdlib>
#include <limits>

#include "ffsi/numeric.hpp"

namespace ffsi {

std::uint64_t checked_pow(std::uint64_t base, unsigned exponent) noexcept {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (unsigned i = 0; i < exponent; ++i) {
    if (base != 0 && result > kMax / base) return kMax;
    result *= base;
  }
  return result;
}

Budget Budget::standard() {
  Budget b;
  if (const char* env = std::getenv("FFSI_BUDGET")) {
    std::string_view text(env);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc() && ptr == text.data() + text.size() && value > 0) b.limit = value;
  }
  return b;
}

void Budget::require(std::uint64_t work, std::string_view what) const {
  if (work > limit) {
    throw BudgetExceeded(std::string(what) + " needs " +
                         (work == std::numeric_limits<std::uint64_t>::max() ? std::string("overflowing")
                                                                             : std::to_string(work)) +
                         " items, budget is " + std::to_string(limit));
  }
}

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt big_pow(std::uint64_t base, unsigned exponent) {
  BigInt r = 1;
  for (unsigned i = 0; i < exponent; ++i) r *= base;
  return r;
}

std::string to_string(const BigInt& x) { return x.str(); }

BigInt exact_div(const BigInt& num, const BigInt& den, const char* what) {
  if (den == 0) throw ConsistencyError(std::string(what) + ": division by zero");
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) {
    throw ConsistencyError(std::string(what) + ": " + num.str() + " is not divisible by " + den.str());
  }
  return q;
}

std::int64_t to_int64(const BigInt& x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min()) {
    throw ConsistencyError("integer " + x.str() + " does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(x);
}

}  // namespace ffsi
