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

#ifndef FFSI_FIELD_HPP
#define FFSI_FIELD_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ffsi/budget.hpp"

namespace ffsi {

/// An element of F_q, q = p^e.
///
/// `value` packs the power-basis coordinates as base-p digits, least
/// significant digit first, so `value` ranges over [0, q) and the integer
/// order on `value` is the canonical enumeration order of the field.
struct FieldElement {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

namespace detail {

struct FieldTables {
  std::uint32_t p = 0;
  std::uint32_t e = 0;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> modulus;    // ascending, monic, size e + 1
  std::vector<std::uint32_t> exp_table;  // g^i for i in [0, 2(q-1))
  std::vector<std::uint32_t> log_table;  // log_g(x) for x != 0
  std::vector<std::uint32_t> neg_table;
  std::vector<std::uint32_t> add_table;  // only for small odd-characteristic extensions
};

}  // namespace detail

/// The finite field F_{p^e}, built as F_p[x]/(modulus) with the
/// lexicographically least monic irreducible modulus of degree e.
///
/// A FieldSpec is an immutable shared handle; copies are cheap and
/// identical (p, e) always yield the same tables.
class FieldSpec {
 public:
  /// Builds F_{p^e}. Throws DomainError for non-prime p or e == 0 and
  /// BudgetExceeded when p^e exceeds the budget.
  static FieldSpec make(std::uint32_t p, std::uint32_t e = 1, Budget budget = Budget::standard());

  std::uint32_t p() const noexcept { return t_->p; }
  std::uint32_t e() const noexcept { return t_->e; }
  std::uint32_t q() const noexcept { return t_->q; }
  bool is_prime_field() const noexcept { return t_->e == 1; }

  /// Ascending coefficients of the defining polynomial over F_p.
  const std::vector<std::uint32_t>& modulus() const noexcept { return t_->modulus; }

  FieldElement zero() const noexcept { return {0}; }
  FieldElement one() const noexcept { return {1}; }

  /// The element with the given packed index; throws DomainError if >= q.
  FieldElement element(std::uint32_t index) const;

  /// Image of an integer under Z -> F_p -> F_q.
  FieldElement from_int(std::int64_t n) const noexcept;

  /// Builds an element from e power-basis coordinates in [0, p).
  FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(FieldElement x) const;

  FieldElement add(FieldElement a, FieldElement b) const noexcept {
    const auto& t = *t_;
    if (t.e == 1) {
      std::uint32_t s = a.value + b.value;
      return {s >= t.p ? s - t.p : s};
    }
    if (t.p == 2) return {a.value ^ b.value};
    if (!t.add_table.empty()) return {t.add_table[std::size_t{a.value} * t.q + b.value]};
    return {add_digits(a.value, b.value)};
  }

  FieldElement neg(FieldElement a) const noexcept { return {t_->neg_table[a.value]}; }

  FieldElement sub(FieldElement a, FieldElement b) const noexcept { return add(a, neg(b)); }

  FieldElement mul(FieldElement a, FieldElement b) const noexcept {
    if (a.value == 0 || b.value == 0) return {0};
    const auto& t = *t_;
    return {t.exp_table[t.log_table[a.value] + t.log_table[b.value]]};
  }

  /// Multiplicative inverse; throws DomainError on zero.
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  FieldElement pow(FieldElement a, std::uint64_t k) const noexcept;

  /// The absolute Frobenius x -> x^p.
  FieldElement frobenius(FieldElement a) const noexcept { return pow(a, t_->p); }

  /// Least (by index) generator of the multiplicative group.
  FieldElement primitive_element() const noexcept { return {t_->exp_table[1 % t_->exp_table.size()]}; }

  /// Discrete logarithm base primitive_element(); throws DomainError on zero.
  std::uint32_t log(FieldElement a) const;

  std::string to_string(FieldElement a) const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept {
    return a.t_ == b.t_ || (a.p() == b.p() && a.e() == b.e());
  }

 private:
  explicit FieldSpec(std::shared_ptr<const detail::FieldTables> t) : t_(std::move(t)) {}
  std::uint32_t add_digits(std::uint32_t a, std::uint32_t b) const noexcept;

  std::shared_ptr<const detail::FieldTables> t_;
};

bool is_prime(std::uint64_t n) noexcept;

/// The embedding F_{p^a} -> F_{p^b} (a | b) sending the generator x of the
/// source power basis to the least root of the source modulus in the target.
class FieldEmbedding {
 public:
  FieldEmbedding(const FieldSpec& source, const FieldSpec& target);

  FieldElement operator()(FieldElement x) const { return image_.at(x.value); }
  const FieldSpec& source() const noexcept { return source_; }
  const FieldSpec& target() const noexcept { return target_; }

 private:
  FieldSpec source_;
  FieldSpec target_;
  std::vector<FieldElement> image_;
};

}  // namespace ffsi

#endif  // FFSI_FIELD_HPP
