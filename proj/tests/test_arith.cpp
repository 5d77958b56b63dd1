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

#include <gtest/gtest.h>

#include "ffsi/arith.hpp"
#include "ffsi/enumerate.hpp"

namespace ffsi {
namespace {

Poly P(const FieldSpec& F, std::initializer_list<std::int64_t> c) { return Poly::from_ints(F, c); }

// Ordered tuples (g_1, ..., g_k) of monics with deg g_i = parts[i] and
// product f, by multiplying out every candidate tuple.
std::int64_t tuple_count(const Poly& f, const std::vector<int>& parts) {
  const FieldSpec& F = f.field();
  std::int64_t count = 0;
  std::vector<Poly> prefix{Poly::constant(F, F.one())};
  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == parts.size()) {
      if (prefix.back() == f) ++count;
      return;
    }
    for (const Poly& g : enumerate_monic(F, parts[i])) {
      prefix.push_back(prefix.back() * g);
      self(self, i + 1);
      prefix.pop_back();
    }
  };
  recurse(recurse, 0);
  return count;
}

// Monic divisors of f by trial division.
std::vector<Poly> monic_divisors(const Poly& f) {
  std::vector<Poly> out;
  for (int d = 0; d <= f.degree(); ++d)
    for (const Poly& g : enumerate_monic(f.field(), d))
      if ((f % g).is_zero()) out.push_back(g);
  return out;
}

TEST(DivisorTest, SpecExamples) {
  const FieldSpec F = FieldSpec::make(2);
  EXPECT_EQ(divisor_k(P(F, {0, 1}), 2), 2);
  EXPECT_EQ(divisor_k(P(F, {0, 0, 1}), 2), 3);
  for (const Poly& f : enumerate_monic(F, 4)) EXPECT_EQ(divisor_k(f, 1), 1);
  EXPECT_EQ(divisor_restricted(P(F, {0, 1, 1}), {1, 1}), 2);
  EXPECT_EQ(divisor_restricted(P(F, {0, 0, 1}), {2}), 1);
  EXPECT_EQ(divisor_restricted(P(F, {1, 1, 1}), {1, 1}), 0);
  EXPECT_THROW(divisor_restricted(P(F, {1, 1, 1}), {1, 2}), DomainError);
  EXPECT_THROW(divisor_k(P(F, {1, 1}), 0), DomainError);
}

TEST(DivisorTest, RestrictedMatchesTupleEnumeration) {
  for (std::uint32_t p : {2u, 3u}) {
    const FieldSpec F = FieldSpec::make(p);
    const int nmax = p == 2 ? 5 : 4;
    for (int n = 1; n <= nmax; ++n) {
      for (int k = 1; k <= 3; ++k) {
        const auto parts_list = compositions(n, k, true);
        for (const Poly& f : enumerate_monic(F, n))
          for (const auto& parts : parts_list) ASSERT_EQ(divisor_restricted(f, parts), tuple_count(f, parts));
      }
    }
  }
}

TEST(DivisorTest, DivisorRelation) {
  const FieldSpec F = FieldSpec::make(3);
  for (int n = 1; n <= 5; ++n)
    for (const Poly& f : enumerate_monic(F, n))
      for (int k = 1; k <= 4; ++k) {
        BigInt sum = 0;
        for (const auto& nu : compositions(n, k, true)) sum += divisor_restricted(f, nu);
        ASSERT_EQ(divisor_k(f, k), sum);
      }
}

TEST(DivisorTest, TwoFoldIsDivisorCount) {
  const FieldSpec F = FieldSpec::make(2, 2);
  for (int n = 1; n <= 3; ++n)
    for (const Poly& f : enumerate_monic(F, n)) EXPECT_EQ(divisor_k(f, 2), monic_divisors(f).size());
}

TEST(MobiusTest, SpecExamples) {
  const FieldSpec F = FieldSpec::make(2);
  EXPECT_EQ(mobius(P(F, {0, 0, 1})), 0);
  EXPECT_EQ(mobius(P(F, {0, 1, 1})), 1);
  EXPECT_EQ(mobius(P(F, {1, 1, 0, 1})), -1);
  EXPECT_EQ(mobius(P(F, {1})), 1);
}

TEST(MangoldtTest, SpecExamples) {
  const FieldSpec F = FieldSpec::make(2);
  EXPECT_EQ(mangoldt(P(F, {0, 0, 0, 1})), 1);
  EXPECT_EQ(mangoldt(P(F, {0, 1, 1})), 0);
  EXPECT_EQ(mangoldt(P(F, {1, 1, 1})), 2);
  EXPECT_THROW(mangoldt(P(F, {1})), DomainError);
}

TEST(MobiusTest, DivisorSumsVanish) {
  // sum_{g | f} mu(g) = 0 and sum_{g | f} Lambda(g) = deg f for deg f >= 1.
  for (std::uint32_t p : {2u, 3u}) {
    const FieldSpec F = FieldSpec::make(p);
    for (int n = 1; n <= 4; ++n) {
      for (const Poly& f : enumerate_monic(F, n)) {
        int mu_sum = 0;
        int lambda_sum = 0;
        for (const Poly& g : monic_divisors(f)) {
          mu_sum += mobius(g);
          if (g.degree() > 0) lambda_sum += mangoldt(g);
        }
        ASSERT_EQ(mu_sum, 0) << f.to_string();
        ASSERT_EQ(lambda_sum, n) << f.to_string();
      }
    }
  }
}

TEST(IdentityTest, PrimePolynomialCountInstance) {
  const FieldSpec F = FieldSpec::make(2);
  int total = 0;
  int irreducible_cubics = 0;
  for (const Poly& f : enumerate_monic(F, 3)) {
    total += mangoldt(f);
    if (mangoldt(f) == 3) ++irreducible_cubics;
  }
  EXPECT_EQ(irreducible_cubics, 2);
  EXPECT_EQ(total, 8);
}

TEST(IdentityTest, DegreeSliceSums) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const FieldSpec F = FieldSpec::make(p);
    for (int n = 1; n <= (p == 5 ? 4 : 6); ++n) {
      BigInt lambda = 0, mu = 0;
      std::vector<BigInt> dk(5, 0);
      for (const Poly& f : enumerate_monic(F, n)) {
        const auto type = factor(f).type();
        lambda += mangoldt(type);
        mu += mobius(type);
        for (int k = 1; k <= 4; ++k) dk[static_cast<std::size_t>(k)] += divisor_k(type, k);
      }
      const BigInt qn = big_pow(p, static_cast<unsigned>(n));
      EXPECT_EQ(lambda, qn);
      if (n >= 2) EXPECT_EQ(mu, 0);
      for (int k = 1; k <= 4; ++k)
        EXPECT_EQ(dk[static_cast<std::size_t>(k)], binomial(static_cast<unsigned>(n + k - 1), static_cast<unsigned>(k - 1)) * qn);
    }
  }
}

TEST(IdentityTest, FactorizationFunctionIdentities) {
  for (std::uint32_t p : {2u, 3u}) {
    const FieldSpec F = FieldSpec::make(p);
    for (int n = 1; n <= 5; ++n) {
      const VirtualRep alt = alternating_exterior_sum(n);
      for (const Poly& f : enumerate_monic(F, n)) {
        const auto type = factor(f).type();
        ASSERT_EQ(mobius(type), (n % 2 == 0 ? 1 : -1) * factorization_function(SignRep{n}, type));
        ASSERT_EQ(mangoldt(type), factorization_function(alt, type));
        for (int k = 1; k <= 3; ++k)
          for (const auto& nu : compositions(n, k, true))
            ASSERT_EQ(divisor_restricted(type, nu), factorization_function(YoungInducedRep{nu}, type));
      }
    }
  }
}

TEST(ArithSpecTest, ParseAndPrint) {
  for (const char* text : {"dk:3", "dkr:1,0,2", "mobius", "lambda", "fpi:sign", "fpi:extstd:1", "fpi:young:2,1", "fpi:irr:2,1"})
    EXPECT_EQ(to_string(parse_arith_fn(text, 3)), text);
  EXPECT_THROW(parse_arith_fn("dkr:1,1", 3), DomainError);
  EXPECT_THROW(parse_arith_fn("dk:0", 3), DomainError);
  EXPECT_THROW(parse_arith_fn("dk:", 3), DomainError);
  EXPECT_THROW(parse_arith_fn("zeta", 3), DomainError);
}

TEST(ArithSpecTest, EvaluateDispatches) {
  const FieldSpec F = FieldSpec::make(3);
  const Poly f = P(F, {0, 0, 1}) * P(F, {1, 1});
  EXPECT_EQ(evaluate(parse_arith_fn("dk:2", 3), f), 6);
  EXPECT_EQ(evaluate(parse_arith_fn("mobius", 3), f), 0);
  EXPECT_EQ(evaluate(parse_arith_fn("lambda", 3), f), 0);
  EXPECT_EQ(evaluate(parse_arith_fn("dkr:1,2", 3), f), tuple_count(f, {1, 2}));
  EXPECT_EQ(evaluate(parse_arith_fn("fpi:triv", 3), f), 1);
}

}  // namespace
}  // namespace ffsi
