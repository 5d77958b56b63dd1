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

#ifndef FFSI_LFUNC_HPP
#define FFSI_LFUNC_HPP

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ffsi/numeric.hpp"
#include "ffsi/poly.hpp"

namespace ffsi {

using Complex = std::complex<double>;

/// An element of Z[zeta_E], kept as a multiset of exponents of zeta_E.
/// Equality tests reduce modulo the cyclotomic polynomial Phi_E, so they
/// are exact.
class CyclotomicSum {
 public:
  explicit CyclotomicSum(std::uint32_t order = 1);

  static CyclotomicSum integer(std::uint32_t order, std::int64_t value);

  std::uint32_t order() const noexcept { return static_cast<std::uint32_t>(counts_.size()); }
  const std::vector<std::int64_t>& counts() const noexcept { return counts_; }

  /// Adds mult * zeta^exponent.
  void add(std::uint32_t exponent, std::int64_t mult = 1);
  CyclotomicSum& operator+=(const CyclotomicSum& other);
  CyclotomicSum& operator-=(const CyclotomicSum& other);
  CyclotomicSum& operator*=(std::int64_t k);
  CyclotomicSum operator*(const CyclotomicSum& other) const;
  CyclotomicSum conj() const;

  /// Coefficients of the representative of degree < phi(E) in Z[x] / Phi_E.
  std::vector<BigInt> reduced() const;
  bool is_zero() const;
  bool equals(std::int64_t value) const;
  Complex value() const;

 private:
  std::vector<std::int64_t> counts_;
};

/// Integer coefficients of the n-th cyclotomic polynomial, ascending.
std::vector<std::int64_t> cyclotomic_polynomial(std::uint32_t n);

/// (F_q[u]/u^{m+1})^x with a polycyclic presentation.
///
/// Residues are coded as sum c_j q^j over the coefficients c_0..c_m;
/// units are the codes with c_0 != 0. Generators are the least codes, in
/// increasing order, that are not in the span of the earlier ones; every
/// unit is a unique product g_1^{k_1} ... g_t^{k_t} with 0 <= k_i < r_i.
class UnitGroup {
 public:
  static std::shared_ptr<const UnitGroup> build(const FieldSpec& field, int m, Budget budget = Budget::standard());

  const FieldSpec& field() const noexcept { return field_; }
  int m() const noexcept { return m_; }
  std::uint64_t order() const noexcept { return units_.size(); }
  /// Least common multiple of the element orders.
  std::uint32_t exponent() const noexcept { return exponent_; }
  /// q^{m+1}, the size of the residue code space.
  std::uint64_t code_space() const noexcept { return coords_.size(); }

  std::uint64_t code(const std::vector<FieldElement>& series) const;
  std::vector<FieldElement> residue(std::uint64_t code) const;
  bool is_unit(std::uint64_t code) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t pow(std::uint64_t a, std::uint64_t k) const;
  std::uint64_t element_order(std::uint64_t a) const;

  /// Unit codes in increasing order.
  const std::vector<std::uint64_t>& units() const noexcept { return units_; }
  const std::vector<std::uint64_t>& generators() const noexcept { return generators_; }
  const std::vector<std::uint32_t>& relative_orders() const noexcept { return relative_orders_; }
  /// relations()[i]: exponents of g_1..g_{i-1} expressing g_i^{r_i}.
  const std::vector<std::vector<std::uint32_t>>& relations() const noexcept { return relations_; }
  /// Exponent vector of a unit in the presentation.
  const std::vector<std::uint32_t>& coordinates(std::uint64_t code) const;

  /// Invariant factors d_1 | d_2 | ... with product equal to the order,
  /// recovered from the counts of elements of each prime-power order.
  std::vector<std::uint64_t> invariant_factors() const;

 private:
  UnitGroup(FieldSpec field, int m) : field_(std::move(field)), m_(m) {}

  FieldSpec field_;
  int m_;
  std::uint32_t exponent_ = 1;
  std::vector<std::uint64_t> units_;
  std::vector<std::uint64_t> generators_;
  std::vector<std::uint32_t> relative_orders_;
  std::vector<std::vector<std::uint32_t>> relations_;
  std::vector<std::vector<std::uint32_t>> coords_;
};

std::shared_ptr<const UnitGroup> build_unit_group(const FieldSpec& field, int m, Budget budget = Budget::standard());

/// A Dirichlet character modulo u^{m+1}: chi(g) = zeta_E^{exponent(g)}.
struct DirichletCharacter {
  std::shared_ptr<const UnitGroup> group;
  std::uint32_t id = 0;
  /// Values on the generators, as exponents mod E.
  std::vector<std::uint32_t> generator_exponents;
  /// Exponent per residue code; non-units hold kNotUnit.
  std::vector<std::uint32_t> table;
  bool even = false;
  bool primitive = false;

  static constexpr std::uint32_t kNotUnit = 0xffffffffu;

  std::uint32_t modulus_order() const noexcept { return group->exponent(); }
  std::uint32_t exponent(std::uint64_t code) const;
  Complex value(std::uint64_t code) const;
  DirichletCharacter conj() const;
};

/// All characters passing the filters, in the order of their generator
/// exponent vectors. even_only keeps characters trivial on F_q^x;
/// primitive_only keeps those nontrivial on 1 + u^m F_q.
std::vector<DirichletCharacter> enumerate_characters(const std::shared_ptr<const UnitGroup>& group, bool even_only,
                                                     bool primitive_only, Budget budget = Budget::standard());
std::vector<DirichletCharacter> enumerate_characters(const FieldSpec& field, int m, bool even_only, bool primitive_only,
                                                     Budget budget = Budget::standard());

/// Code of the reversal f(1/u) u^{deg f} mod u^{m+1}, a unit for monic f.
std::uint64_t reversal_code(const UnitGroup& group, const Poly& f);

/// Exponent of psi(f) = chi(f(1/u) u^{deg f}).
std::uint32_t psi_exponent(const DirichletCharacter& chi, const Poly& f);
Complex psi_from_chi(const DirichletCharacter& chi, const Poly& f);

/// L-function coefficients as exact cyclotomic sums with their values.
struct LPolynomial {
  std::uint64_t q = 0;
  std::vector<CyclotomicSum> exact;
  std::vector<Complex> coeffs;

  int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  /// Value at x = q^{-s}.
  Complex evaluate(Complex s) const;
  /// Value of the conjugate character's L-function at s.
  Complex evaluate_conj(Complex s) const;
};

/// L(s, psi): a_d = sum over monic f in T of degree d of psi(f), for
/// d = 0..m-1. Requires an even primitive character and verifies a_m = 0
/// exactly, throwing ConsistencyError otherwise.
LPolynomial l_polynomial(const DirichletCharacter& chi);

/// L(s, chi): b_d = sum over monic f in u of degree d prime to u of chi(f),
/// for d = 0..m. Verifies b_{m+1} = 0 and b = (1 - x) a exactly.
LPolynomial l_polynomial_chi(const DirichletCharacter& chi);

struct EpsilonFactor {
  /// sum over monic f of degree m - 1 of psi(f).
  CyclotomicSum sum;
  /// q^{-(m-1)/2} sum.
  Complex value;
  /// Whether sum * conj(sum) equals q^{m-1} exactly.
  bool unit_exact = false;
};

EpsilonFactor epsilon_factor(const DirichletCharacter& chi);

/// 1/2, 1/2 + i pi / (4 ln q), 1/4 and 3/4.
std::vector<Complex> default_sample_points(std::uint64_t q);

struct FunctionalEquationCheck {
  /// max |L(s,psi) - eps q^{(m-1)(1/2-s)} L(1-s, conj psi)| over the samples.
  double residual = 0.0;
  /// The same with the exponent written (m-1)(s-1/2).
  double literal_residual = 0.0;
};

FunctionalEquationCheck check_functional_equation(const DirichletCharacter& chi, const std::vector<Complex>& samples = {});

struct CharacterSumCheck {
  CyclotomicSum sum;
  std::int64_t expected = 0;
  bool pass = false;
};

/// Sum over psi in S'_{m,q} of psi(f) against q^m - q^{m-1}, -q^{m-1}
/// or 0 according to how many top coefficients of f vanish. `family` must
/// be the even primitive characters of one group.
CharacterSumCheck character_sum_identity(const std::vector<DirichletCharacter>& family, const Poly& f);

enum class MomentVerdict { kPass, kSoftPass, kFail };

std::string to_string(MomentVerdict v);

struct MomentReport {
  std::uint32_t p = 0;
  std::uint32_t e = 0;
  std::uint64_t q = 0;
  int m = 0;
  std::vector<Complex> alphas;
  int twist = 0;
  std::uint64_t family_size = 0;
  /// Average of eps^s prod L(1/2 + alpha_i, psi).
  Complex value;
  /// Average of eps^s prod L(1/2 + alpha_i, chi).
  Complex chi_value;
  /// prod 1/(1 - q^{-(1/2 + alpha_i)}) untwisted, 0 twisted.
  Complex main_term;
  double bound = 0.0;
  double deviation = 0.0;
  double ratio = 0.0;
  /// Deviations up to soft_constant * bound earn SOFT_PASS.
  double soft_constant = 1.0;
  MomentVerdict verdict = MomentVerdict::kFail;

  nlohmann::json to_json() const;
};

/// m^r (r+s+2)^{(r+s)(m-1)+m} q^{(-m + floor((r+s)(m-1)/p) - floor(m/p) + 1)/2}.
double moment_bound(std::uint64_t q, std::uint32_t p, int m, int r, int s);

MomentReport moment(const FieldSpec& field, int m, const std::vector<Complex>& alphas, int twist,
                    double soft_constant = 16.0, Budget budget = Budget::standard(), unsigned threads = 0);

/// Per character: id, a_0..a_{m-1} and epsilon, as RFC 4180 CSV.
std::string character_table_csv(const FieldSpec& field, int m, Budget budget = Budget::standard());

}  // namespace ffsi

#endif  // FFSI_LFUNC_HPP
