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

#include "ffsi/poly.hpp"

#include <stdexcept>

namespace ffsi {

Poly::Poly(FieldSpec field, std::vector<FieldElement> ascending)
    : field_(std::move(field)), c_(std::move(ascending)) {
  for (auto x : c_)
    if (x.value >= field_.q()) throw DomainError("coefficient outside the field");
  normalize();
}

Poly Poly::from_ints(const FieldSpec& field, std::initializer_list<std::int64_t> ascending) {
  std::vector<FieldElement> c;
  c.reserve(ascending.size());
  for (auto v : ascending) c.push_back(field.from_int(v));
  return Poly(field, std::move(c));
}

Poly Poly::constant(const FieldSpec& field, FieldElement c) { return Poly(field, {c}); }

Poly Poly::monomial(const FieldSpec& field, int degree, FieldElement c) {
  if (degree < 0) throw DomainError("negative monomial degree");
  std::vector<FieldElement> v(static_cast<std::size_t>(degree) + 1, field.zero());
  v.back() = c;
  return Poly(field, std::move(v));
}

void Poly::normalize() noexcept {
  while (!c_.empty() && c_.back().value == 0) c_.pop_back();
}

void Poly::require_same_field(const Poly& o) const {
  if (!(field_ == o.field_)) throw DomainError("polynomial operands over different fields");
}

Poly& Poly::operator+=(const Poly& o) {
  require_same_field(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.add(c_[i], o.c_[i]);
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_same_field(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.sub(c_[i], o.c_[i]);
  normalize();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  require_same_field(o);
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<FieldElement> r(c_.size() + o.c_.size() - 1, field_.zero());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].value == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = field_.add(r[i + j], field_.mul(c_[i], o.c_[j]));
  }
  c_ = std::move(r);
  normalize();
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.c_) x = field_.neg(x);
  return r;
}

Poly operator/(const Poly& a, const Poly& b) { return divrem(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).second; }

Poly Poly::scaled(FieldElement s) const {
  std::vector<FieldElement> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = field_.mul(c_[i], s);
  return Poly(field_, std::move(r));
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  return scaled(field_.inv(c_.back()));
}

std::string Poly::to_string(std::string_view var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const FieldElement x = c_[static_cast<std::size_t>(i)];
    if (x.value == 0) continue;
    if (!out.empty()) out += " + ";
    const bool unit = x == field_.one();
    if (!unit || i == 0) out += field_.to_string(x);
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
  if (!(a.field() == b.field())) throw DomainError("polynomial operands over different fields");
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const FieldSpec& F = a.field();
  const int db = b.degree();
  if (a.degree() < db) return {Poly(F), a};
  std::vector<FieldElement> r(a.coeffs().begin(), a.coeffs().end());
  std::vector<FieldElement> quo(static_cast<std::size_t>(a.degree() - db) + 1, F.zero());
  const auto bc = b.coeffs();
  const FieldElement inv_lead = F.inv(b.lead());
  for (int i = a.degree(); i >= db; --i) {
    const FieldElement coef = r[static_cast<std::size_t>(i)];
    if (coef.value == 0) continue;
    const FieldElement factor = F.mul(coef, inv_lead);
    quo[static_cast<std::size_t>(i - db)] = factor;
    for (int j = 0; j <= db; ++j) {
      auto& slot = r[static_cast<std::size_t>(i - db + j)];
      slot = F.sub(slot, F.mul(factor, bc[static_cast<std::size_t>(j)]));
    }
  }
  r.resize(static_cast<std::size_t>(db));
  return {Poly(F, std::move(quo)), Poly(F, std::move(r))};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

FieldElement evaluate(const Poly& f, FieldElement x) {
  const FieldSpec& F = f.field();
  FieldElement acc = F.zero();
  const auto c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = F.add(F.mul(acc, x), c[i]);
  return acc;
}

Poly derivative(const Poly& f) {
  const FieldSpec& F = f.field();
  if (f.degree() < 1) return Poly(F);
  std::vector<FieldElement> d(static_cast<std::size_t>(f.degree()));
  for (int i = 1; i <= f.degree(); ++i) d[static_cast<std::size_t>(i - 1)] = F.mul(F.from_int(i), f.coeff(i));
  return Poly(F, std::move(d));
}

Poly compose(const Poly& f, const Poly& g) {
  if (!(f.field() == g.field())) throw DomainError("polynomial operands over different fields");
  Poly acc(f.field());
  for (int i = f.degree(); i >= 0; --i) acc = acc * g + Poly::constant(f.field(), f.coeff(i));
  return acc;
}

Poly powmod(const Poly& base, std::uint64_t k, const Poly& m) {
  Poly result = Poly::constant(m.field(), m.field().one()) % m;
  Poly b = base % m;
  while (k > 0) {
    if (k & 1) result = (result * b) % m;
    k >>= 1;
    if (k > 0) b = (b * b) % m;
  }
  return result;
}

Poly pow(const Poly& base, unsigned k) {
  Poly result = Poly::constant(base.field(), base.field().one());
  for (unsigned i = 0; i < k; ++i) result *= base;
  return result;
}

Poly pth_root(const Poly& f) {
  const FieldSpec& F = f.field();
  const int p = static_cast<int>(F.p());
  // Coefficient roots: c^(1/p) = c^(p^(e-1)).
  const std::uint64_t root_exp = checked_pow(F.p(), F.e() - 1);
  std::vector<FieldElement> r;
  for (int i = 0; i <= f.degree(); ++i) {
    if (i % p != 0) {
      if (f.coeff(i).value != 0) throw DomainError("pth_root of a polynomial with nonzero derivative");
      continue;
    }
    r.push_back(F.pow(f.coeff(i), root_exp));
  }
  return Poly(F, std::move(r));
}

}  // namespace ffsi
