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

#ifndef FFSI_NUMERIC_HPP
#define FFSI_NUMERIC_HPP

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ffsi {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);
BigInt big_pow(std::uint64_t base, unsigned exponent);

std::string to_string(const BigInt& x);

/// Exact division; throws ConsistencyError when `den` does not divide `num`.
BigInt exact_div(const BigInt& num, const BigInt& den, const char* what);

/// Narrowing conversion; throws ConsistencyError when out of range.
std::int64_t to_int64(const BigInt& x);

}  // namespace ffsi

#endif  // FFSI_NUMERIC_HPP
