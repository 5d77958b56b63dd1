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

#include "ffsi/factor.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace ffsi {
namespace {

constexpr std::uint64_t kSplitSeed = 0x5eed'f00d'cafe'2357ULL;

void squarefree_parts(const Poly& f, int scale, std::vector<std::pair<Poly, int>>& out) {
  if (f.degree() < 1) return;
  const int p = static_cast<int>(f.field().p());
  const Poly d = derivative(f);
  if (d.is_zero()) {
    squarefree_parts(pth_root(f), scale * p, out);
    return;
  }
  Poly c = gcd(f, d);
  Poly w = f / c;
  int i = 1;
  while (!w.is_one()) {
    Poly y = gcd(w, c);
    Poly fac = w / y;
    if (!fac.is_one()) out.emplace_back(std::move(fac), i * scale);
    ++i;
    w = std::move(y);
    c = c / w;
  }
  if (!c.is_one()) squarefree_parts(pth_root(c), scale * p, out);
}

// Distinct-degree factorization of a squarefree monic polynomial.
std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f) {
  const FieldSpec& F = f.field();
  const Poly x = Poly::variable(F);
  std::vector<std::pair<Poly, int>> out;
  Poly rest = f;
  Poly h = x % rest;
  int d = 0;
  while (rest.degree() >= 2 * (d + 1)) {
    ++d;
    h = powmod(h, F.q(), rest);
    Poly g = gcd(rest, h - x);
    if (!g.is_one()) {
      rest = rest / g;
      h = h % rest;
      out.emplace_back(std::move(g), d);
    }
  }
  if (rest.degree() > 0) {
    const int deg = rest.degree();
    out.emplace_back(std::move(rest), deg);
  }
  return out;
}

Poly random_poly(const FieldSpec& F, int max_degree, std::mt19937_64& rng) {
  std::vector<FieldElement> c(static_cast<std::size_t>(max_degree) + 1);
  for (auto& x : c) x = FieldElement{static_cast<std::uint32_t>(rng() % F.q())};
  return Poly(F, std::move(c));
}

// An element whose gcd with g splits g with probability about 1/2 when g is
// a product of irreducibles of degree d.
Poly splitting_element(const Poly& a, const Poly& g, int d) {
  const FieldSpec& F = g.field();
  if (F.p() == 2) {
    // Absolute trace to F_2: a + a^2 + a^4 + ... over e*d squarings.
    Poly term = a % g;
    Poly trace = term;
    for (std::uint32_t i = 1; i < F.e() * static_cast<std::uint32_t>(d); ++i) {
      term = (term * term) % g;
      trace += term;
    }
    return trace;
  }
  // a^((q^d - 1)/2) = (a * a^q * ... * a^(q^(d-1)))^((q-1)/2).
  Poly conj = a % g;
  Poly norm = conj;
  for (int i = 1; i < d; ++i) {
    conj = powmod(conj, F.q(), g);
    norm = (norm * conj) % g;
  }
  return powmod(norm, (F.q() - 1) / 2, g) - Poly::constant(F, F.one());
}

void equal_degree(const Poly& g, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  const FieldSpec& F = g.field();
  for (;;) {
    const Poly a = random_poly(F, g.degree() - 1, rng);
    if (a.degree() < 1) continue;
    const Poly h = gcd(g, splitting_element(a, g, d));
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree(h, d, rng, out);
      equal_degree(g / h, d, rng, out);
      return;
    }
  }
}

bool factor_less(const Factor& a, const Factor& b) {
  if (a.prime.degree() != b.prime.degree()) return a.prime.degree() < b.prime.degree();
  for (int i = a.prime.degree(); i >= 0; --i) {
    if (a.prime.coeff(i) != b.prime.coeff(i)) return a.prime.coeff(i) < b.prime.coeff(i);
  }
  return false;
}

}  // namespace

int FactorizationType::degree() const noexcept {
  int n = 0;
  for (auto [d, e] : parts) n += d * e;
  return n;
}

bool FactorizationType::is_squarefree() const noexcept {
  return std::all_of(parts.begin(), parts.end(), [](auto de) { return de.second == 1; });
}

std::string FactorizationType::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += "(" + std::to_string(parts[i].first) + "," + std::to_string(parts[i].second) + ")";
  }
  return out + "}";
}

Poly Factorization::product(const FieldSpec& field) const {
  Poly r = Poly::constant(field, field.one());
  for (const auto& f : factors) r *= pow(f.prime, static_cast<unsigned>(f.multiplicity));
  return r;
}

FactorizationType Factorization::type() const {
  FactorizationType t;
  for (const auto& f : factors) t.parts.emplace_back(f.prime.degree(), f.multiplicity);
  std::sort(t.parts.begin(), t.parts.end());
  return t;
}

Factorization factor(const Poly& f) {
  if (!f.is_monic()) throw DomainError("factor: input polynomial is not monic");
  if (f.degree() < 1) throw DomainError("factor: input polynomial is constant");
  std::mt19937_64 rng(kSplitSeed);
  std::vector<std::pair<Poly, int>> sqf;
  squarefree_parts(f, 1, sqf);

  Factorization out;
  for (const auto& [part, mult] : sqf) {
    for (const auto& [block, d] : distinct_degree(part)) {
      std::vector<Poly> primes;
      equal_degree(block, d, rng, primes);
      for (auto& pr : primes) out.factors.push_back({std::move(pr), mult});
    }
  }
  std::sort(out.factors.begin(), out.factors.end(), factor_less);
  return out;
}

bool is_irreducible(const Poly& f) {
  const Factorization fz = factor(f);
  return fz.factors.size() == 1 && fz.factors[0].multiplicity == 1;
}

namespace {

using Coeffs = std::vector<FieldElement>;

struct SieveState {
  const FieldSpec* field;
  const std::vector<Coeffs>* primes;  // sorted by degree
  std::vector<Coeffs> buffers;         // buffers[depth] holds the running product
  std::vector<std::size_t> stack;      // indices into primes
  std::uint64_t q;
};

template <typename Leaf>
void sieve_products(SieveState& s, std::size_t start, int remaining, Leaf&& leaf) {
  const FieldSpec& F = *s.field;
  const std::size_t depth = s.stack.size();
  const Coeffs& cur = s.buffers[depth];
  for (std::size_t j = start; j < s.primes->size(); ++j) {
    const Coeffs& pr = (*s.primes)[j];
    const int d = static_cast<int>(pr.size()) - 1;
    if (d > remaining) break;
    Coeffs& next = s.buffers[depth + 1];
    next.assign(cur.size() + pr.size() - 1, F.zero());
    for (std::size_t a = 0; a < cur.size(); ++a) {
      if (cur[a].value == 0) continue;
      for (std::size_t b = 0; b < pr.size(); ++b) next[a + b] = F.add(next[a + b], F.mul(cur[a], pr[b]));
    }
    s.stack.push_back(j);
    if (remaining == d) {
      leaf(next, s.stack);
    } else {
      sieve_products(s, j, remaining - d, leaf);
    }
    s.stack.pop_back();
  }
}

std::uint64_t monic_index(const Coeffs& c, std::uint64_t q) {
  std::uint64_t idx = 0;
  for (std::size_t i = c.size() - 1; i-- > 0;) idx = idx * q + c[i].value;
  return idx;
}

Coeffs monic_from_index(std::uint64_t idx, int degree, std::uint64_t q) {
  Coeffs c(static_cast<std::size_t>(degree) + 1);
  for (int i = 0; i < degree; ++i) {
    c[static_cast<std::size_t>(i)] = FieldElement{static_cast<std::uint32_t>(idx % q)};
    idx /= q;
  }
  c.back() = FieldElement{1};
  return c;
}

}  // namespace

FactorTypeTable FactorTypeTable::build(const FieldSpec& field, int n, Budget budget) {
  if (n < 1) throw DomainError("FactorTypeTable: degree must be at least 1");
  const std::uint64_t q = field.q();
  budget.require(checked_pow(q, static_cast<unsigned>(n)), "factorization type table");

  FactorTypeTable table(field, n);
  std::vector<Coeffs> primes;
  std::map<FactorizationType, std::uint32_t> type_ids;
  constexpr std::uint32_t kUnset = 0xffffffffu;

  for (int D = 1; D <= n; ++D) {
    const std::uint64_t count = checked_pow(q, static_cast<unsigned>(D));
    std::vector<std::uint32_t> marks(count, kUnset);
    SieveState s{&field, &primes, std::vector<Coeffs>(static_cast<std::size_t>(D) + 2), {}, q};
    s.buffers[0] = {field.one()};
    const bool record = D == n;
    sieve_products(s, 0, D, [&](const Coeffs& product, const std::vector<std::size_t>& stack) {
      std::uint32_t id = 0;
      if (record) {
        FactorizationType t;
        for (std::size_t i = 0; i < stack.size();) {
          std::size_t k = i;
          while (k < stack.size() && stack[k] == stack[i]) ++k;
          t.parts.emplace_back(static_cast<int>(primes[stack[i]].size()) - 1, static_cast<int>(k - i));
          i = k;
        }
        std::sort(t.parts.begin(), t.parts.end());
        id = type_ids.try_emplace(std::move(t), static_cast<std::uint32_t>(type_ids.size())).first->second;
      }
      marks[monic_index(product, q)] = id;
    });
    FactorizationType irreducible{{{D, 1}}};
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      if (marks[idx] != kUnset) continue;
      if (record) {
        marks[idx] = type_ids.try_emplace(irreducible, static_cast<std::uint32_t>(type_ids.size())).first->second;
      } else {
        primes.push_back(monic_from_index(idx, D, q));
      }
    }
    if (record) table.ids_ = std::move(marks);
  }

  // Renumber so that ids follow the canonical order of types.
  std::vector<std::uint32_t> remap(type_ids.size());
  table.types_.reserve(type_ids.size());
  for (auto& [t, id] : type_ids) {
    remap[id] = static_cast<std::uint32_t>(table.types_.size());
    table.types_.push_back(t);
  }
  for (auto& id : table.ids_) id = remap[id];
  return table;
}

}  // namespace ffsi
