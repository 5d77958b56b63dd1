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

// Splitting-field evaluation of F_pi. Nothing here uses cycle types,
// factorization types or character formulas: permutations act on explicit
// root tuples and characters come from explicit models.

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>

#include "ffsi/symmetric.hpp"

namespace ffsi {
namespace {

using Perm = std::vector<int>;

std::vector<Perm> all_permutations(int n) {
  std::vector<Perm> out;
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

int permutation_sign(const Perm& s) {
  int inversions = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] > s[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

// Ordered set partitions with the given block sizes that s maps to themselves.
std::int64_t stable_labelings(const Perm& s, const std::vector<int>& blocks) {
  std::vector<int> word;
  for (std::size_t b = 0; b < blocks.size(); ++b) word.insert(word.end(), static_cast<std::size_t>(blocks[b]), static_cast<int>(b));
  std::int64_t count = 0;
  do {
    bool stable = true;
    for (std::size_t x = 0; x < s.size() && stable; ++x) stable = word[static_cast<std::size_t>(s[x])] == word[x];
    if (stable) ++count;
  } while (std::next_permutation(word.begin(), word.end()));
  return count;
}

std::int64_t determinant(const std::vector<std::vector<int>>& a) {
  const int k = static_cast<int>(a.size());
  if (k == 0) return 1;
  std::int64_t det = 0;
  for (const Perm& w : all_permutations(k)) {
    std::int64_t term = permutation_sign(w);
    for (int i = 0; i < k && term != 0; ++i) term *= a[static_cast<std::size_t>(i)][static_cast<std::size_t>(w[static_cast<std::size_t>(i)])];
    det += term;
  }
  return det;
}

// Trace of s on the j-th exterior power of the permutation module: the sum
// of principal j x j minors of its permutation matrix.
std::int64_t exterior_perm_trace(const Perm& s, int j) {
  const int n = static_cast<int>(s.size());
  std::int64_t total = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != j) continue;
    std::vector<int> idx;
    for (int x = 0; x < n; ++x)
      if (mask >> x & 1u) idx.push_back(x);
    std::vector<std::vector<int>> minor(idx.size(), std::vector<int>(idx.size()));
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t c = 0; c < idx.size(); ++c) minor[r][c] = s[static_cast<std::size_t>(idx[c])] == idx[r] ? 1 : 0;
    total += determinant(minor);
  }
  return total;
}

std::int64_t explicit_character(const RepSpec& rep, const Perm& s) {
  if (std::holds_alternative<SignRep>(rep)) return permutation_sign(s);
  if (const auto* r = std::get_if<YoungInducedRep>(&rep)) return stable_labelings(s, r->blocks);
  if (const auto* r = std::get_if<ExtStdRep>(&rep)) {
    std::int64_t total = 0;
    for (int j = 0; j <= r->i; ++j) total += ((r->i - j) % 2 == 0 ? 1 : -1) * exterior_perm_trace(s, j);
    return total;
  }
  // Jacobi-Trudi: chi^lambda = sum_w sgn(w) chi of the Young permutation
  // module with blocks lambda_i - i + w(i).
  const auto& lambda = std::get<IrreducibleRep>(rep).shape.parts;
  const int len = static_cast<int>(lambda.size());
  std::int64_t total = 0;
  for (const Perm& w : all_permutations(len)) {
    std::vector<int> blocks;
    bool valid = true;
    for (int i = 0; i < len && valid; ++i) {
      const int b = lambda[static_cast<std::size_t>(i)] - i + w[static_cast<std::size_t>(i)];
      valid = b >= 0;
      blocks.push_back(b);
    }
    if (valid) total += permutation_sign(w) * stable_labelings(s, blocks);
  }
  return total;
}

std::vector<std::int64_t> character_table_row(const RepSpec& rep) {
  static std::mutex mutex;
  static std::map<RepSpec, std::vector<std::int64_t>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(rep); it != cache.end()) return it->second;
  }
  std::vector<std::int64_t> row;
  for (const Perm& s : all_permutations(rep_n(rep))) row.push_back(explicit_character(rep, s));
  std::lock_guard lock(mutex);
  return cache.emplace(rep, std::move(row)).first->second;
}

// Roots of f with multiplicity in the smallest extension containing all of
// them, together with that extension.
std::pair<FieldSpec, std::vector<FieldElement>> split(const Poly& f, Budget budget) {
  const FieldSpec& F = f.field();
  for (std::uint32_t L = 1;; ++L) {
    budget.require(checked_pow(F.q(), L), "splitting field for the brute-force oracle");
    const FieldSpec K = FieldSpec::make(F.p(), F.e() * L, budget);
    const FieldEmbedding phi(F, K);
    std::vector<FieldElement> c;
    for (auto x : f.coeffs()) c.push_back(phi(x));
    Poly g(K, std::move(c));
    std::vector<FieldElement> roots;
    for (std::uint32_t x = 0; x < K.q() && g.degree() > 0; ++x) {
      const Poly linear(K, {K.neg({x}), K.one()});
      while (g.degree() > 0 && evaluate(g, {x}).value == 0) {
        roots.push_back({x});
        g = g / linear;
      }
    }
    if (static_cast<int>(roots.size()) == f.degree()) return {K, roots};
  }
}

std::vector<std::int64_t> fixed_counts(const Poly& f, Budget budget) {
  auto [K, roots] = split(f, budget);
  const std::uint64_t q = f.field().q();
  const int n = f.degree();
  std::sort(roots.begin(), roots.end());
  std::vector<std::vector<FieldElement>> tuples;
  do tuples.push_back(roots);
  while (std::next_permutation(roots.begin(), roots.end()));

  std::vector<std::int64_t> counts;
  for (const Perm& s : all_permutations(n)) {
    std::int64_t fixed = 0;
    for (const auto& t : tuples) {
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) ok = K.pow(t[static_cast<std::size_t>(s[static_cast<std::size_t>(i)])], q) == t[static_cast<std::size_t>(i)];
      if (ok) ++fixed;
    }
    counts.push_back(fixed);
  }
  return counts;
}

}  // namespace

BigInt brute_force_Fpi(const RepSpec& rep, const Poly& f, Budget budget) {
  validate(rep);
  const int n = rep_n(rep);
  if (!f.is_monic() || f.degree() != n) throw DomainError("oracle needs a monic polynomial of degree n");
  if (n > 6) throw DomainError("brute-force oracle is limited to n <= 6");

  static std::mutex mutex;
  static std::map<std::tuple<std::uint32_t, std::uint32_t, std::vector<FieldElement>>, std::vector<std::int64_t>> cache;
  const auto key = std::tuple{f.field().p(), f.field().e(), std::vector<FieldElement>(f.coeffs().begin(), f.coeffs().end())};
  std::vector<std::int64_t> fixed;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) fixed = it->second;
  }
  if (fixed.empty()) {
    fixed = fixed_counts(f, budget);
    std::lock_guard lock(mutex);
    if (cache.size() > 8192) cache.clear();
    cache.emplace(key, fixed);
  }

  const auto chi = character_table_row(rep);
  BigInt total = 0;
  for (std::size_t i = 0; i < chi.size(); ++i) total += BigInt(chi[i]) * fixed[i];
  return exact_div(total, factorial(static_cast<unsigned>(n)), "brute-force trace average");
}

}  // namespace ffsi
