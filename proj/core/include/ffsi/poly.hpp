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

#ifndef FFSI_POLY_HPP
#define FFSI_POLY_HPP

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ffsi/field.hpp"

namespace ffsi {

/// A univariate polynomial over F_q stored densely in ascending order.
///
/// The variable is abstract: callers read it as T or u. The zero
/// polynomial has no coefficients and degree -1; otherwise the leading
/// coefficient is nonzero.
class Poly {
 public:
  explicit Poly(FieldSpec field) : field_(std::move(field)) {}
  Poly(FieldSpec field, std::vector<FieldElement> ascending);

  /// Convenience for prime-field literals: small integers reduced mod p.
  static Poly from_ints(const FieldSpec& field, std::initializer_list<std::int64_t> ascending);
  static Poly constant(const FieldSpec& field, FieldElement c);
  static Poly monomial(const FieldSpec& field, int degree, FieldElement c);
  static Poly variable(const FieldSpec& field) { return monomial(field, 1, field.one()); }

  const FieldSpec& field() const noexcept { return field_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == field_.one(); }
  bool is_monic() const noexcept { return !c_.empty() && c_.back() == field_.one(); }

  std::span<const FieldElement> coeffs() const noexcept { return c_; }
  /// Coefficient of x^i; zero beyond the degree.
  FieldElement coeff(int i) const noexcept {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : field_.zero();
  }
  FieldElement lead() const noexcept { return c_.empty() ? field_.zero() : c_.back(); }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator/(const Poly& a, const Poly& b);
  friend Poly operator%(const Poly& a, const Poly& b);
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) noexcept {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

  Poly scaled(FieldElement s) const;
  Poly monic() const;

  /// Renders with the given variable name, highest degree first.
  std::string to_string(std::string_view var = "T") const;

 private:
  void normalize() noexcept;
  void require_same_field(const Poly& o) const;

  FieldSpec field_;
  std::vector<FieldElement> c_;
};

/// Quotient and remainder; throws std::domain_error for a zero divisor.
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

FieldElement evaluate(const Poly& f, FieldElement x);
Poly derivative(const Poly& f);

/// f(g).
Poly compose(const Poly& f, const Poly& g);

/// base^k mod m.
Poly powmod(const Poly& base, std::uint64_t k, const Poly& m);

Poly pow(const Poly& base, unsigned k);

/// The polynomial g with g(x)^p = f(x); requires f' = 0.
Poly pth_root(const Poly& f);

}  // namespace ffsi

#endif  // FFSI_POLY_HPP
