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

#ifndef FFSI_ENUMERATE_HPP
#define FFSI_ENUMERATE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ffsi/budget.hpp"
#include "ffsi/poly.hpp"

namespace ffsi {

/// The monic polynomials T^n + c_1 T^{n-1} + ... + c_m T^{n-m} + (lower).
struct ShortIntervalSpec {
  FieldSpec field;
  int n = 0;
  int m = 0;
  std::vector<FieldElement> c;

  /// Throws DomainError unless 0 <= m <= n and c has m entries in the field.
  void validate() const;

  /// q^(n-m).
  std::uint64_t size() const noexcept;

  /// Enumeration index of the first member; members are contiguous.
  std::uint64_t first_index() const noexcept;

  std::string to_string() const;
};

/// Packs c as sum c_i q^(m-i), the position of I_c among all q^m intervals.
std::uint64_t interval_index(const FieldSpec& field, const std::vector<FieldElement>& c);

/// Inverse of interval_index.
std::vector<FieldElement> interval_coefficients(const FieldSpec& field, int m, std::uint64_t index);

/// A contiguous run of monic degree-n polynomials in enumeration order.
///
/// The enumeration index of T^n + a_{n-1} T^{n-1} + ... + a_0 is
/// sum a_j q^j, so increasing indices are lexicographic in (a_{n-1}, ..., a_0).
/// Ranges split into disjoint chunks for parallel scans.
class MonicRange {
 public:
  MonicRange(FieldSpec field, int n, std::uint64_t first, std::uint64_t count);

  /// All q^n monic polynomials of degree n.
  static MonicRange all(const FieldSpec& field, int n, Budget budget = Budget::standard());

  /// The members of I_c.
  static MonicRange interval(const ShortIntervalSpec& spec, Budget budget = Budget::standard());

  const FieldSpec& field() const noexcept { return field_; }
  int degree() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return count_; }
  std::uint64_t first_index() const noexcept { return first_; }

  /// The i-th member (0-based within the range).
  Poly at(std::uint64_t i) const;

  /// Members [begin, end) of this range.
  MonicRange slice(std::uint64_t begin, std::uint64_t end) const;

  /// Splits into at most `parts` nonempty chunks of nearly equal size, in order.
  std::vector<MonicRange> chunks(std::uint64_t parts) const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::uint64_t i = 0; i < count_; ++i) fn(first_ + i, at(i));
  }

 private:
  FieldSpec field_;
  int n_;
  std::uint64_t first_;
  std::uint64_t count_;
};

/// Monic polynomial of degree n with the given enumeration index.
Poly monic_at(const FieldSpec& field, int n, std::uint64_t index);

/// Enumeration index of a monic polynomial.
std::uint64_t monic_index(const Poly& f);

/// Every monic degree-n polynomial in enumeration order.
std::vector<Poly> enumerate_monic(const FieldSpec& field, int n, Budget budget = Budget::standard());

/// Every member of I_c, lexicographic in the free lower coefficients.
std::vector<Poly> enumerate_interval(const ShortIntervalSpec& spec, Budget budget = Budget::standard());

}  // namespace ffsi

#endif  // FFSI_ENUMERATE_HPP
