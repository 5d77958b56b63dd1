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

#include "ffsi/lfunc.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>

#include "ffsi/parallel.hpp"
#include "ffsi/report.hpp"

namespace ffsi {
namespace {

std::vector<std::uint32_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(static_cast<std::uint32_t>(d));
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(static_cast<std::uint32_t>(n));
  return out;
}

Complex root_of_unity(std::uint32_t order, std::uint64_t k) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k % order) / static_cast<double>(order);
  return {std::cos(angle), std::sin(angle)};
}

Complex q_power(std::uint64_t q, Complex exponent) { return std::exp(exponent * std::log(static_cast<double>(q))); }

}  // namespace

// ---------------------------------------------------------------------------
// Cyclotomic arithmetic

std::vector<std::int64_t> cyclotomic_polynomial(std::uint32_t n) {
  if (n == 0) throw DomainError("cyclotomic polynomial of order 0");
  static std::mutex mu;
  static std::map<std::uint32_t, std::vector<std::int64_t>> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
  }
  std::vector<std::int64_t> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (std::uint32_t d = 1; d < n; ++d) {
    if (n % d) continue;
    const auto den = cyclotomic_polynomial(d);
    const std::size_t dd = den.size() - 1;
    std::vector<std::int64_t> quo(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
      const std::int64_t c = num[i];
      quo[i - dd] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    num = std::move(quo);
  }
  std::lock_guard lock(mu);
  memo.emplace(n, num);
  return num;
}

CyclotomicSum::CyclotomicSum(std::uint32_t order) : counts_(order == 0 ? 1 : order, 0) {}

CyclotomicSum CyclotomicSum::integer(std::uint32_t order, std::int64_t value) {
  CyclotomicSum s(order);
  s.add(0, value);
  return s;
}

void CyclotomicSum::add(std::uint32_t exponent, std::int64_t mult) { counts_[exponent % counts_.size()] += mult; }

CyclotomicSum& CyclotomicSum::operator+=(const CyclotomicSum& other) {
  if (other.order() != order()) throw DomainError("cyclotomic sums of different orders");
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
  return *this;
}

CyclotomicSum& CyclotomicSum::operator-=(const CyclotomicSum& other) {
  if (other.order() != order()) throw DomainError("cyclotomic sums of different orders");
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] -= other.counts_[i];
  return *this;
}

CyclotomicSum& CyclotomicSum::operator*=(std::int64_t k) {
  for (auto& c : counts_) c *= k;
  return *this;
}

CyclotomicSum CyclotomicSum::operator*(const CyclotomicSum& other) const {
  if (other.order() != order()) throw DomainError("cyclotomic sums of different orders");
  CyclotomicSum out(order());
  const std::size_t E = counts_.size();
  for (std::size_t i = 0; i < E; ++i) {
    if (counts_[i] == 0) continue;
    for (std::size_t j = 0; j < E; ++j) out.counts_[(i + j) % E] += counts_[i] * other.counts_[j];
  }
  return out;
}

CyclotomicSum CyclotomicSum::conj() const {
  CyclotomicSum out(order());
  const std::size_t E = counts_.size();
  for (std::size_t i = 0; i < E; ++i) out.counts_[(E - i) % E] += counts_[i];
  return out;
}

std::vector<BigInt> CyclotomicSum::reduced() const {
  const auto phi = cyclotomic_polynomial(order());
  const std::size_t deg = phi.size() - 1;
  std::vector<BigInt> poly(counts_.begin(), counts_.end());
  for (std::size_t i = poly.size(); i-- > deg;) {
    const BigInt c = poly[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) poly[i - deg + j] -= c * phi[j];
  }
  poly.resize(deg);
  return poly;
}

bool CyclotomicSum::is_zero() const {
  const auto r = reduced();
  return std::all_of(r.begin(), r.end(), [](const BigInt& x) { return x == 0; });
}

bool CyclotomicSum::equals(std::int64_t value) const {
  CyclotomicSum diff = *this;
  diff.add(0, -value);
  return diff.is_zero();
}

Complex CyclotomicSum::value() const {
  Complex acc = 0;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i] != 0) acc += static_cast<double>(counts_[i]) * root_of_unity(order(), i);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Unit group

std::shared_ptr<const UnitGroup> UnitGroup::build(const FieldSpec& field, int m, Budget budget) {
  if (m < 0) throw DomainError("unit group needs m >= 0");
  const std::uint64_t q = field.q();
  const std::uint64_t space = checked_pow(q, static_cast<unsigned>(m) + 1);
  budget.require((q - 1) * (space / q), "unit group of F_" + std::to_string(q) + "[u]/u^" + std::to_string(m + 1));

  std::shared_ptr<UnitGroup> g(new UnitGroup(field, m));
  g->coords_.assign(space, {});
  for (std::uint64_t c = 0; c < space; ++c)
    if (c % q != 0) g->units_.push_back(c);

  std::vector<char> in_span(space, 0);
  std::vector<std::uint64_t> span{1};
  in_span[1] = 1;
  for (std::uint64_t cand : g->units_) {
    if (in_span[cand]) continue;
    const std::size_t index = g->generators_.size();
    std::uint32_t r = 1;
    std::uint64_t power = cand;
    while (!in_span[power]) {
      power = g->mul(power, cand);
      ++r;
    }
    std::vector<std::uint32_t> word = g->coords_[power];
    word.resize(index, 0);
    const std::size_t base = span.size();
    std::uint64_t gj = 1;
    for (std::uint32_t j = 1; j < r; ++j) {
      gj = g->mul(gj, cand);
      for (std::size_t h = 0; h < base; ++h) {
        const std::uint64_t x = g->mul(gj, span[h]);
        if (in_span[x]) throw ConsistencyError("unit group presentation is not a direct extension");
        in_span[x] = 1;
        auto& cx = g->coords_[x];
        cx = g->coords_[span[h]];
        cx.resize(index, 0);
        cx.push_back(j);
        span.push_back(x);
      }
    }
    g->generators_.push_back(cand);
    g->relative_orders_.push_back(r);
    g->relations_.push_back(std::move(word));
  }
  if (span.size() != g->units_.size()) throw ConsistencyError("unit group presentation does not cover the group");
  for (std::uint64_t u : g->units_) g->coords_[u].resize(g->generators_.size(), 0);

  std::uint64_t exponent = 1;
  for (std::uint64_t gen : g->generators_) {
    std::uint64_t order = 1;
    for (std::uint64_t x = gen; x != 1; x = g->mul(x, gen)) ++order;
    exponent = std::lcm(exponent, order);
  }
  g->exponent_ = static_cast<std::uint32_t>(exponent);
  return g;
}

std::shared_ptr<const UnitGroup> build_unit_group(const FieldSpec& field, int m, Budget budget) {
  return UnitGroup::build(field, m, budget);
}

std::uint64_t UnitGroup::code(const std::vector<FieldElement>& series) const {
  std::uint64_t c = 0;
  const std::size_t len = std::min(series.size(), static_cast<std::size_t>(m_) + 1);
  for (std::size_t j = len; j-- > 0;) c = c * field_.q() + series[j].value;
  return c;
}

std::vector<FieldElement> UnitGroup::residue(std::uint64_t code) const {
  std::vector<FieldElement> s(static_cast<std::size_t>(m_) + 1);
  for (auto& x : s) {
    x = FieldElement{static_cast<std::uint32_t>(code % field_.q())};
    code /= field_.q();
  }
  return s;
}

bool UnitGroup::is_unit(std::uint64_t code) const { return code < coords_.size() && code % field_.q() != 0; }

std::uint64_t UnitGroup::mul(std::uint64_t a, std::uint64_t b) const {
  const auto x = residue(a);
  const auto y = residue(b);
  std::vector<FieldElement> z(x.size(), field_.zero());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].value == 0) continue;
    for (std::size_t j = 0; i + j < z.size(); ++j) z[i + j] = field_.add(z[i + j], field_.mul(x[i], y[j]));
  }
  return code(z);
}

std::uint64_t UnitGroup::pow(std::uint64_t a, std::uint64_t k) const {
  std::uint64_t r = 1;
  while (k) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

std::uint64_t UnitGroup::element_order(std::uint64_t a) const {
  if (!is_unit(a)) throw DomainError("element order of a non-unit");
  std::uint64_t order = exponent_;
  for (std::uint32_t l : prime_factors(exponent_)) {
    while (order % l == 0 && pow(a, order / l) == 1) order /= l;
  }
  return order;
}

const std::vector<std::uint32_t>& UnitGroup::coordinates(std::uint64_t code) const {
  if (!is_unit(code)) throw DomainError("coordinates of a non-unit");
  return coords_[code];
}

std::vector<std::uint64_t> UnitGroup::invariant_factors() const {
  std::vector<std::uint64_t> orders;
  orders.reserve(units_.size());
  for (std::uint64_t u : units_) orders.push_back(element_order(u));
  // exps[l][t]: exponent of l in the t-th largest cyclic factor.
  std::vector<std::pair<std::uint32_t, std::vector<int>>> exps;
  std::size_t factors = 0;
  for (std::uint32_t l : prime_factors(exponent_)) {
    int top = 0;
    for (std::uint64_t e = exponent_; e % l == 0; e /= l) ++top;
    std::vector<std::uint64_t> within(static_cast<std::size_t>(top) + 1, 0);
    for (std::uint64_t o : orders) {
      int v = 0;
      for (; o % l == 0; o /= l) ++v;
      for (int j = v; j <= top; ++j) ++within[static_cast<std::size_t>(j)];
    }
    // within[j] = l^{sum_i min(j, a_i)}; successive ratios count the a_i >= j.
    std::vector<int> at_least(static_cast<std::size_t>(top) + 1, 0);
    for (int j = 1; j <= top; ++j) {
      std::uint64_t ratio = within[static_cast<std::size_t>(j)] / within[static_cast<std::size_t>(j - 1)];
      int k = 0;
      for (; ratio > 1; ratio /= l) ++k;
      at_least[static_cast<std::size_t>(j)] = k;
    }
    std::vector<int> per_factor(static_cast<std::size_t>(at_least[1]), 0);
    for (int j = 1; j <= top; ++j)
      for (int t = 0; t < at_least[static_cast<std::size_t>(j)]; ++t) ++per_factor[static_cast<std::size_t>(t)];
    factors = std::max(factors, per_factor.size());
    exps.emplace_back(l, std::move(per_factor));
  }
  std::vector<std::uint64_t> out(factors, 1);
  for (const auto& [l, per] : exps)
    for (std::size_t t = 0; t < per.size(); ++t) out[t] *= checked_pow(l, static_cast<unsigned>(per[t]));
  std::reverse(out.begin(), out.end());
  std::uint64_t product = 1;
  for (auto d : out) product *= d;
  if (product != order()) throw ConsistencyError("invariant factors do not multiply to the group order");
  return out;
}

// ---------------------------------------------------------------------------
// Characters

std::uint32_t DirichletCharacter::exponent(std::uint64_t code) const {
  const std::uint32_t e = table.at(code);
  if (e == kNotUnit) throw DomainError("character evaluated at a non-unit");
  return e;
}

Complex DirichletCharacter::value(std::uint64_t code) const { return root_of_unity(modulus_order(), exponent(code)); }

DirichletCharacter DirichletCharacter::conj() const {
  DirichletCharacter c = *this;
  const std::uint32_t E = modulus_order();
  for (auto& x : c.generator_exponents) x = (E - x) % E;
  for (auto& x : c.table)
    if (x != kNotUnit) x = (E - x) % E;
  return c;
}

std::vector<DirichletCharacter> enumerate_characters(const std::shared_ptr<const UnitGroup>& group, bool even_only,
                                                     bool primitive_only, Budget budget) {
  const UnitGroup& G = *group;
  budget.require(G.order() * G.order(), "character table");
  const std::uint64_t E = G.exponent();
  const std::size_t t = G.generators().size();
  const std::uint64_t q = G.field().q();

  std::vector<std::uint64_t> scalars;
  for (std::uint64_t a = 1; a < q; ++a) scalars.push_back(a);
  std::vector<std::uint64_t> top;
  for (std::uint64_t b = 1; b < q; ++b) top.push_back(G.m() == 0 ? b : 1 + b * checked_pow(q, static_cast<unsigned>(G.m())));

  const auto eval = [&](const std::vector<std::uint32_t>& x, std::uint64_t code) {
    const auto& c = G.coordinates(code);
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < t; ++i) acc += static_cast<std::uint64_t>(c[i]) * x[i];
    return static_cast<std::uint32_t>(acc % E);
  };

  std::vector<DirichletCharacter> out;
  std::vector<std::uint32_t> x(t, 0);
  std::uint32_t next_id = 0;
  const std::function<void(std::size_t)> solve = [&](std::size_t i) {
    if (i == t) {
      const std::uint32_t id = next_id++;
      const bool even = std::all_of(scalars.begin(), scalars.end(), [&](std::uint64_t a) { return eval(x, a) == 0; });
      const bool primitive = std::any_of(top.begin(), top.end(), [&](std::uint64_t c) { return eval(x, c) != 0; });
      if ((even_only && !even) || (primitive_only && !primitive)) return;
      DirichletCharacter chi;
      chi.group = group;
      chi.id = id;
      chi.generator_exponents = x;
      chi.even = even;
      chi.primitive = primitive;
      chi.table.assign(G.code_space(), DirichletCharacter::kNotUnit);
      for (std::uint64_t u : G.units()) chi.table[u] = eval(x, u);
      out.push_back(std::move(chi));
      return;
    }
    const std::uint64_t r = G.relative_orders()[i];
    std::uint64_t rhs = 0;
    for (std::size_t j = 0; j < i; ++j) rhs += static_cast<std::uint64_t>(G.relations()[i][j]) * x[j];
    rhs %= E;
    if (rhs % r != 0) throw ConsistencyError("character relation has no solution");
    for (std::uint64_t k = 0; k < r; ++k) {
      x[i] = static_cast<std::uint32_t>((rhs / r + k * (E / r)) % E);
      solve(i + 1);
    }
  };
  solve(0);
  return out;
}

std::vector<DirichletCharacter> enumerate_characters(const FieldSpec& field, int m, bool even_only, bool primitive_only,
                                                     Budget budget) {
  return enumerate_characters(build_unit_group(field, m, budget), even_only, primitive_only, budget);
}

std::uint64_t reversal_code(const UnitGroup& group, const Poly& f) {
  if (!f.is_monic()) throw DomainError("psi is defined on monic polynomials");
  const int d = f.degree();
  std::vector<FieldElement> s(static_cast<std::size_t>(group.m()) + 1, group.field().zero());
  for (int j = 0; j <= std::min(d, group.m()); ++j) s[static_cast<std::size_t>(j)] = f.coeff(d - j);
  const std::uint64_t c = group.code(s);
  if (!group.is_unit(c)) throw ConsistencyError("reversal of a monic polynomial is not a unit");
  return c;
}

std::uint32_t psi_exponent(const DirichletCharacter& chi, const Poly& f) { return chi.exponent(reversal_code(*chi.group, f)); }

Complex psi_from_chi(const DirichletCharacter& chi, const Poly& f) {
  return root_of_unity(chi.modulus_order(), psi_exponent(chi, f));
}

// ---------------------------------------------------------------------------
// L-functions

namespace {

void require_family_member(const DirichletCharacter& chi) {
  if (!chi.even || !chi.primitive) throw DomainError("L-polynomials are defined for even primitive characters");
  if (chi.group->m() < 1) throw DomainError("L-polynomials need m >= 1");
}

// Sum of chi over residues 1 + h_1 u + ... + h_d u^d: the psi-side coefficient a_d.
CyclotomicSum psi_coefficient(const DirichletCharacter& chi, int d) {
  const UnitGroup& G = *chi.group;
  const std::uint64_t q = G.field().q();
  CyclotomicSum s(chi.modulus_order());
  const std::uint64_t heads = checked_pow(q, static_cast<unsigned>(std::min(d, G.m())));
  for (std::uint64_t h = 0; h < heads; ++h) s.add(chi.exponent(1 + q * h));
  if (d > G.m()) s *= static_cast<std::int64_t>(checked_pow(q, static_cast<unsigned>(d - G.m())));
  return s;
}

LPolynomial finish(std::uint64_t q, std::vector<CyclotomicSum> exact) {
  LPolynomial L;
  L.q = q;
  for (const auto& c : exact) L.coeffs.push_back(c.value());
  L.exact = std::move(exact);
  return L;
}

}  // namespace

Complex LPolynomial::evaluate(Complex s) const {
  const Complex x = q_power(q, -s);
  Complex acc = 0;
  for (std::size_t d = coeffs.size(); d-- > 0;) acc = acc * x + coeffs[d];
  return acc;
}

Complex LPolynomial::evaluate_conj(Complex s) const {
  const Complex x = q_power(q, -s);
  Complex acc = 0;
  for (std::size_t d = coeffs.size(); d-- > 0;) acc = acc * x + std::conj(coeffs[d]);
  return acc;
}

LPolynomial l_polynomial(const DirichletCharacter& chi) {
  require_family_member(chi);
  const int m = chi.group->m();
  std::vector<CyclotomicSum> a;
  for (int d = 0; d < m; ++d) a.push_back(psi_coefficient(chi, d));
  if (!psi_coefficient(chi, m).is_zero()) throw ConsistencyError("L(s, psi) has a nonzero coefficient in degree m");
  return finish(chi.group->field().q(), std::move(a));
}

LPolynomial l_polynomial_chi(const DirichletCharacter& chi) {
  require_family_member(chi);
  const UnitGroup& G = *chi.group;
  const int m = G.m();
  const std::uint64_t q = G.field().q();
  std::vector<CyclotomicSum> b;
  for (int d = 0; d <= m + 1; ++d) {
    CyclotomicSum s(chi.modulus_order());
    if (d == 0) {
      s.add(0);
    } else {
      // u^d + f_{d-1} u^{d-1} + ... + f_0 with f_0 != 0, reduced mod u^{m+1}.
      const std::uint64_t lower = checked_pow(q, static_cast<unsigned>(d - 1));
      const std::uint64_t lead = d <= m ? checked_pow(q, static_cast<unsigned>(d)) : 0;
      for (std::uint64_t f0 = 1; f0 < q; ++f0)
        for (std::uint64_t rest = 0; rest < lower; ++rest) s.add(chi.exponent(lead + f0 + q * rest));
    }
    b.push_back(std::move(s));
  }
  if (!b.back().is_zero()) throw ConsistencyError("L(s, chi) has a nonzero coefficient in degree m + 1");
  b.pop_back();
  // b_d = a_d - a_{d-1}, with a_m = 0.
  for (int d = 0; d <= m; ++d) {
    CyclotomicSum check = b[static_cast<std::size_t>(d)];
    if (d < m) check -= psi_coefficient(chi, d);
    if (d > 0) check += psi_coefficient(chi, d - 1);
    if (!check.is_zero()) throw ConsistencyError("L(s, chi) differs from (1 - q^{-s}) L(s, psi)");
  }
  return finish(q, std::move(b));
}

EpsilonFactor epsilon_factor(const DirichletCharacter& chi) {
  require_family_member(chi);
  const int m = chi.group->m();
  const std::uint64_t q = chi.group->field().q();
  EpsilonFactor eps;
  eps.sum = psi_coefficient(chi, m - 1);
  eps.value = eps.sum.value() * std::pow(static_cast<double>(q), -(m - 1) / 2.0);
  eps.unit_exact = (eps.sum * eps.sum.conj()).equals(checked_pow(q, static_cast<unsigned>(m - 1)));
  return eps;
}

std::vector<Complex> default_sample_points(std::uint64_t q) {
  const double lq = std::log(static_cast<double>(q));
  return {{0.5, 0.0}, {0.5, std::numbers::pi / (4.0 * lq)}, {0.25, 0.0}, {0.75, 0.0}};
}

FunctionalEquationCheck check_functional_equation(const DirichletCharacter& chi, const std::vector<Complex>& samples) {
  const LPolynomial L = l_polynomial(chi);
  const EpsilonFactor eps = epsilon_factor(chi);
  const std::uint64_t q = L.q;
  const double k = static_cast<double>(chi.group->m() - 1);
  FunctionalEquationCheck out;
  for (Complex s : samples.empty() ? default_sample_points(q) : samples) {
    const Complex lhs = L.evaluate(s);
    const Complex reflected = L.evaluate_conj(1.0 - s);
    const Complex rhs = eps.value * q_power(q, k * (0.5 - s)) * reflected;
    const Complex literal = eps.value * q_power(q, k * (s - 0.5)) * reflected;
    out.residual = std::max(out.residual, std::abs(lhs - rhs));
    out.literal_residual = std::max(out.literal_residual, std::abs(lhs - literal));
  }
  return out;
}

CharacterSumCheck character_sum_identity(const std::vector<DirichletCharacter>& family, const Poly& f) {
  if (family.empty()) throw DomainError("character sum over an empty family");
  if (!f.is_monic()) throw DomainError("character sum needs a monic polynomial");
  const UnitGroup& G = *family.front().group;
  const int m = G.m();
  const int n = f.degree();
  const auto q = static_cast<std::int64_t>(G.field().q());
  CharacterSumCheck out;
  out.sum = CyclotomicSum(G.exponent());
  const std::uint64_t code = reversal_code(G, f);
  for (const auto& chi : family) out.sum.add(chi.exponent(code));
  // Number of leading zeros among the coefficients of T^{n-1}, T^{n-2}, ...
  int zeros = 0;
  while (zeros < m && f.coeff(n - 1 - zeros).value == 0) ++zeros;
  const std::int64_t qm = checked_pow(static_cast<std::uint64_t>(q), static_cast<unsigned>(m));
  const std::int64_t qm1 = qm / q;
  out.expected = zeros == m ? qm - qm1 : zeros == m - 1 ? -qm1 : 0;
  out.pass = out.sum.equals(out.expected);
  return out;
}

// ---------------------------------------------------------------------------
// Moments

std::string to_string(MomentVerdict v) {
  switch (v) {
    case MomentVerdict::kPass:
      return "PASS";
    case MomentVerdict::kSoftPass:
      return "SOFT_PASS";
    case MomentVerdict::kFail:
      break;
  }
  return "FAIL";
}

double moment_bound(std::uint64_t q, std::uint32_t p, int m, int r, int s) {
  const int P = static_cast<int>(p);
  const int rs = r + s;
  const double halves = -m + (rs * (m - 1)) / P - m / P + 1;
  return std::pow(static_cast<double>(m), r) * std::pow(static_cast<double>(rs + 2), rs * (m - 1) + m) *
         std::pow(static_cast<double>(q), halves / 2.0);
}

MomentReport moment(const FieldSpec& field, int m, const std::vector<Complex>& alphas, int twist, double soft_constant,
                    Budget budget, unsigned threads) {
  if (m < 1) throw DomainError("moments need m >= 1");
  if (twist < 0) throw DomainError("twist power must be nonnegative");
  for (auto a : alphas)
    if (a.real() < 0) throw DomainError("shifts must have nonnegative real part");
  if (soft_constant < 1.0) throw DomainError("soft constant must be at least 1");

  const auto family = enumerate_characters(field, m, true, true, budget);
  const std::uint64_t q = field.q();
  std::vector<Complex> psi_terms(family.size());
  std::vector<Complex> chi_terms(family.size());
  parallel_blocks(family.size(), threads ? threads : default_threads(), [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      const auto& chi = family[i];
      const LPolynomial Lpsi = l_polynomial(chi);
      const LPolynomial Lchi = l_polynomial_chi(chi);
      const Complex eps_s = std::pow(epsilon_factor(chi).value, twist);
      Complex pp = eps_s;
      Complex pc = eps_s;
      for (auto a : alphas) {
        pp *= Lpsi.evaluate(0.5 + a);
        pc *= Lchi.evaluate(0.5 + a);
      }
      psi_terms[i] = pp;
      chi_terms[i] = pc;
    }
  });

  MomentReport rep;
  rep.p = field.p();
  rep.e = field.e();
  rep.q = q;
  rep.m = m;
  rep.alphas = alphas;
  rep.twist = twist;
  rep.family_size = family.size();
  rep.soft_constant = soft_constant;
  for (std::size_t i = 0; i < family.size(); ++i) {
    rep.value += psi_terms[i];
    rep.chi_value += chi_terms[i];
  }
  rep.value /= static_cast<double>(family.size());
  rep.chi_value /= static_cast<double>(family.size());
  rep.main_term = 0.0;
  if (twist == 0) {
    rep.main_term = 1.0;
    for (auto a : alphas) rep.main_term /= 1.0 - q_power(q, -(0.5 + a));
  }
  rep.bound = moment_bound(q, field.p(), m, static_cast<int>(alphas.size()), twist);
  rep.deviation = std::abs(rep.value - rep.main_term);
  rep.ratio = rep.deviation / rep.bound;
  rep.verdict = rep.deviation <= rep.bound                    ? MomentVerdict::kPass
                : rep.deviation <= soft_constant * rep.bound ? MomentVerdict::kSoftPass
                                                              : MomentVerdict::kFail;
  return rep;
}

nlohmann::json MomentReport::to_json() const {
  const auto pair = [](Complex z) { return nlohmann::json::array({z.real(), z.imag()}); };
  auto al = nlohmann::json::array();
  for (auto a : alphas) al.push_back(pair(a));
  return {{"q", q},
          {"p", p},
          {"e", e},
          {"m", m},
          {"r", alphas.size()},
          {"alphas", al},
          {"s", twist},
          {"family_size", family_size},
          {"value", pair(value)},
          {"chi_value", pair(chi_value)},
          {"main_term", pair(main_term)},
          {"bound", bound},
          {"deviation", deviation},
          {"ratio", ratio},
          {"soft_constant", soft_constant},
          {"verdict", to_string(verdict)}};
}

std::string character_table_csv(const FieldSpec& field, int m, Budget budget) {
  const auto family = enumerate_characters(field, m, true, true, budget);
  std::vector<std::string> header{"character_id"};
  for (int d = 0; d < m; ++d) {
    header.push_back("a" + std::to_string(d) + "_re");
    header.push_back("a" + std::to_string(d) + "_im");
  }
  header.insert(header.end(), {"epsilon_re", "epsilon_im"});
  std::string out = csv_row(header);
  const auto num = [](double x) {
    nlohmann::json j = std::abs(x) < 1e-12 ? 0.0 : x;
    return j.dump();
  };
  for (const auto& chi : family) {
    const LPolynomial L = l_polynomial(chi);
    const Complex eps = epsilon_factor(chi).value;
    std::vector<std::string> row{std::to_string(chi.id)};
    for (auto c : L.coeffs) {
      row.push_back(num(c.real()));
      row.push_back(num(c.imag()));
    }
    row.push_back(num(eps.real()));
    row.push_back(num(eps.imag()));
    out += csv_row(row);
  }
  return out;
}

}  // namespace ffsi
