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

#include "ffsi/field.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace ffsi {
namespace {

using Coeffs = std::vector<std::uint32_t>;

// Dense arithmetic in F_p[x]; only used while building a field.

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Coeffs mod_poly(Coeffs a, const Coeffs& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t inv_lead = [&] {
    for (std::uint64_t x = 1; x < p; ++x)
      if (x * m.back() % p == 1) return x;
    return std::uint64_t{1};
  }();
  while (a.size() >= m.size()) {
    const std::uint64_t factor = a.back() * inv_lead % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - factor) * m[i]) % p);
    }
    trim(a);
  }
  return a;
}

Coeffs mul_mod(const Coeffs& a, const Coeffs& b, const Coeffs& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  return mod_poly(std::move(r), m, p);
}

Coeffs pow_mod(Coeffs base, std::uint64_t k, const Coeffs& m, std::uint32_t p) {
  Coeffs r{1};
  while (k > 0) {
    if (k & 1) r = mul_mod(r, base, m, p);
    base = mul_mod(base, base, m, p);
    k >>= 1;
  }
  return r;
}

Coeffs digits_of(std::uint32_t index, std::uint32_t p, std::uint32_t e) {
  Coeffs c(e);
  for (std::uint32_t i = 0; i < e; ++i) {
    c[i] = index % p;
    index /= p;
  }
  return c;
}

std::uint32_t index_of(const Coeffs& c, std::uint32_t p) {
  std::uint32_t index = 0;
  for (std::size_t i = c.size(); i-- > 0;) index = index * p + c[i];
  return index;
}

bool is_irreducible_over_prime_field(const Coeffs& f, std::uint32_t p) {
  const std::uint32_t degree = static_cast<std::uint32_t>(f.size() - 1);
  // Trial division by every monic polynomial of degree 1 .. degree/2.
  for (std::uint32_t d = 1; 2 * d <= degree; ++d) {
    const std::uint64_t count = checked_pow(p, d);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Coeffs g = digits_of(static_cast<std::uint32_t>(idx), p, d);
      g.push_back(1);
      if (mod_poly(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::shared_ptr<const detail::FieldTables> build_tables(std::uint32_t p, std::uint32_t e) {
  auto t = std::make_shared<detail::FieldTables>();
  t->p = p;
  t->e = e;
  t->q = static_cast<std::uint32_t>(checked_pow(p, e));

  // Lexicographically least monic irreducible: coefficient vectors compared
  // from the constant term upward, i.e. the least packed index.
  if (e == 1) {
    t->modulus = {0, 1};
  } else {
    for (std::uint32_t idx = 0; idx < t->q; ++idx) {
      Coeffs f = digits_of(idx, p, e);
      f.push_back(1);
      if (f[0] == 0) continue;
      if (is_irreducible_over_prime_field(f, p)) {
        t->modulus = std::move(f);
        break;
      }
    }
  }
  const Coeffs& m = t->modulus;
  const std::uint32_t order = t->q - 1;

  std::uint32_t generator = 1;
  if (order > 1) {
    const auto factors = prime_factors(order);
    for (std::uint32_t idx = 2; idx < t->q; ++idx) {
      const Coeffs g = mod_poly(digits_of(idx, p, e), m, p);
      bool primitive = true;
      for (std::uint64_t ell : factors) {
        if (pow_mod(g, order / ell, m, p) == Coeffs{1}) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        generator = idx;
        break;
      }
    }
  }

  t->exp_table.assign(2 * std::size_t{order}, 0);
  t->log_table.assign(t->q, 0);
  if (e == 1) {
    std::uint64_t x = 1;
    for (std::uint32_t i = 0; i < order; ++i) {
      t->exp_table[i] = static_cast<std::uint32_t>(x);
      t->log_table[x] = i;
      x = x * generator % p;
    }
  } else {
    const Coeffs g = digits_of(generator, p, e);
    Coeffs x{1};
    for (std::uint32_t i = 0; i < order; ++i) {
      Coeffs padded = x;
      padded.resize(e, 0);
      const std::uint32_t idx = index_of(padded, p);
      t->exp_table[i] = idx;
      t->log_table[idx] = i;
      x = mul_mod(x, g, m, p);
    }
  }
  for (std::uint32_t i = 0; i < order; ++i) t->exp_table[order + i] = t->exp_table[i];

  t->neg_table.resize(t->q);
  for (std::uint32_t idx = 0; idx < t->q; ++idx) {
    Coeffs c = digits_of(idx, p, e);
    for (auto& d : c) d = (p - d) % p;
    t->neg_table[idx] = index_of(c, p);
  }

  if (e > 1 && p != 2 && t->q <= 1024) {
    t->add_table.resize(std::size_t{t->q} * t->q);
    for (std::uint32_t a = 0; a < t->q; ++a) {
      for (std::uint32_t b = 0; b < t->q; ++b) {
        Coeffs ca = digits_of(a, p, e);
        const Coeffs cb = digits_of(b, p, e);
        for (std::uint32_t i = 0; i < e; ++i) ca[i] = (ca[i] + cb[i]) % p;
        t->add_table[std::size_t{a} * t->q + b] = index_of(ca, p);
      }
    }
  }
  return t;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::make(std::uint32_t p, std::uint32_t e, Budget budget) {
  if (!is_prime(p)) throw DomainError("field characteristic " + std::to_string(p) + " is not prime");
  if (e == 0) throw DomainError("field extension degree must be at least 1");
  const std::uint64_t q = checked_pow(p, e);
  budget.require(q, "field F_" + std::to_string(p) + "^" + std::to_string(e));

  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const detail::FieldTables>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{p, e}];
  if (!slot) slot = build_tables(p, e);
  return FieldSpec(slot);
}

FieldElement FieldSpec::element(std::uint32_t index) const {
  if (index >= q()) throw DomainError("field element index " + std::to_string(index) + " out of range");
  return {index};
}

FieldElement FieldSpec::from_int(std::int64_t n) const noexcept {
  const std::int64_t p = t_->p;
  return {static_cast<std::uint32_t>(((n % p) + p) % p)};
}

FieldElement FieldSpec::from_coeffs(std::span<const std::uint32_t> c) const {
  if (c.size() != e()) throw DomainError("field element needs exactly e coordinates");
  std::uint32_t index = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] >= p()) throw DomainError("field coordinate out of range [0, p)");
    index = index * p() + c[i];
  }
  return {index};
}

std::vector<std::uint32_t> FieldSpec::coeffs(FieldElement x) const { return digits_of(x.value, p(), e()); }

FieldElement FieldSpec::inv(FieldElement a) const {
  if (a.value == 0) throw DomainError("inverse of zero in F_q");
  const auto& t = *t_;
  const std::uint32_t order = t.q - 1;
  return {t.exp_table[(order - t.log_table[a.value]) % order]};
}

FieldElement FieldSpec::pow(FieldElement a, std::uint64_t k) const noexcept {
  if (k == 0) return one();
  if (a.value == 0) return zero();
  const auto& t = *t_;
  const std::uint64_t order = t.q - 1;
  return {t.exp_table[(t.log_table[a.value] * (k % order)) % order]};
}

std::uint32_t FieldSpec::log(FieldElement a) const {
  if (a.value == 0) throw DomainError("logarithm of zero in F_q");
  return t_->log_table[a.value];
}

std::string FieldSpec::to_string(FieldElement a) const {
  if (e() == 1) return std::to_string(a.value);
  std::string out = "(";
  const auto c = coeffs(a);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(c[i]);
  }
  return out + ")";
}

std::uint32_t FieldSpec::add_digits(std::uint32_t a, std::uint32_t b) const noexcept {
  const std::uint32_t p = t_->p;
  std::uint32_t result = 0;
  std::uint32_t place = 1;
  for (std::uint32_t i = 0; i < t_->e; ++i) {
    std::uint32_t d = a % p + b % p;
    if (d >= p) d -= p;
    result += d * place;
    place *= p;
    a /= p;
    b /= p;
  }
  return result;
}

FieldEmbedding::FieldEmbedding(const FieldSpec& source, const FieldSpec& target)
    : source_(source), target_(target) {
  if (source.p() != target.p() || target.e() % source.e() != 0) {
    throw DomainError("no embedding F_" + std::to_string(source.q()) + " -> F_" + std::to_string(target.q()));
  }
  // Least root in the target of the source modulus (coefficients lie in F_p).
  const auto& m = source.modulus();
  FieldElement root{0};
  bool found = false;
  for (std::uint32_t idx = 0; idx < target.q() && !found; ++idx) {
    const FieldElement x{idx};
    FieldElement acc = target.zero();
    for (std::size_t i = m.size(); i-- > 0;) acc = target.add(target.mul(acc, x), FieldElement{m[i]});
    if (acc.value == 0) {
      root = x;
      found = true;
    }
  }
  if (!found) throw ConsistencyError("source modulus has no root in the target field");

  image_.resize(source.q());
  for (std::uint32_t idx = 0; idx < source.q(); ++idx) {
    const auto c = source.coeffs(FieldElement{idx});
    FieldElement acc = target.zero();
    for (std::size_t i = c.size(); i-- > 0;) acc = target.add(target.mul(acc, root), FieldElement{c[i]});
    image_[idx] = acc;
  }
}

}  // namespace ffsi
