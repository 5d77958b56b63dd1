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

#include <map>

#include "ffsi/enumerate.hpp"
#include "ffsi/symmetric.hpp"

namespace ffsi {
namespace {

std::vector<RepSpec> all_reps(int n) {
  std::vector<RepSpec> reps{SignRep{n}};
  for (int i = 0; i < n; ++i) reps.push_back(ExtStdRep{n, i});
  // Compositions of n into positive parts, enumerated by cut sets.
  for (unsigned cuts = 0; cuts < (1u << (n - 1)); ++cuts) {
    std::vector<int> blocks{1};
    for (int i = 0; i < n - 1; ++i) {
      if (cuts >> i & 1u) blocks.push_back(1);
      else ++blocks.back();
    }
    reps.push_back(YoungInducedRep{blocks});
  }
  for (const auto& lambda : partitions(n)) reps.push_back(IrreducibleRep{lambda});
  return reps;
}

Poly P(const FieldSpec& F, std::initializer_list<std::int64_t> c) { return Poly::from_ints(F, c); }

TEST(PartitionTest, CountsAndOrder) {
  const std::vector<std::size_t> expected{1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(partitions(n).size(), expected[static_cast<std::size_t>(n)]);
  const auto& p4 = partitions(4);
  EXPECT_EQ(p4.front().parts, (std::vector<int>{4}));
  EXPECT_EQ(p4.back().parts, (std::vector<int>{1, 1, 1, 1}));
  for (std::size_t i = 1; i < p4.size(); ++i) EXPECT_GT(p4[i - 1], p4[i]);
}

TEST(PartitionTest, ClassSizesSumToFactorial) {
  for (int n = 1; n <= 8; ++n) {
    BigInt total = 0;
    for (const auto& tau : partitions(n)) total += class_size(tau);
    EXPECT_EQ(total, factorial(static_cast<unsigned>(n)));
  }
  EXPECT_EQ(class_size(make_partition({2, 1})), 3);
  EXPECT_EQ(centralizer_order(make_partition({2, 2})), 8);
}

TEST(CharacterTest, SpecExamples) {
  EXPECT_EQ(character_value(SignRep{3}, make_partition({2, 1})), -1);
  EXPECT_EQ(character_value(YoungInducedRep{{1, 1, 1}}, make_partition({1, 1, 1})), 6);
  EXPECT_EQ(character_value(ExtStdRep{3, 1}, make_partition({3})), -1);
}

TEST(CharacterTest, ThreeCycleOnStandardByMatrices) {
  // Basis v1 = e1 - e2, v2 = e2 - e3 under e1 -> e2 -> e3 -> e1:
  // v1 -> e2 - e3 = v2, v2 -> e3 - e1 = -v1 - v2.
  const int m[2][2] = {{0, -1}, {1, -1}};
  EXPECT_EQ(m[0][0] + m[1][1], character_value(ExtStdRep{3, 1}, make_partition({3})));
  EXPECT_EQ(m[0][0] * m[1][1] - m[0][1] * m[1][0], character_value(ExtStdRep{3, 2}, make_partition({3})));
}

TEST(CharacterTest, IrreducibleOrthogonality) {
  for (int n = 1; n <= 7; ++n) {
    const auto& ps = partitions(n);
    for (const auto& a : ps) {
      for (const auto& b : ps) {
        BigInt inner = 0;
        for (const auto& tau : ps)
          inner += class_size(tau) * character_value(IrreducibleRep{a}, tau) * character_value(IrreducibleRep{b}, tau);
        EXPECT_EQ(inner, a == b ? factorial(static_cast<unsigned>(n)) : BigInt(0)) << a.to_string() << b.to_string();
      }
    }
  }
}

TEST(CharacterTest, HookShapesAreExteriorPowers) {
  for (int n = 2; n <= 7; ++n) {
    for (int i = 0; i < n; ++i) {
      std::vector<int> hook{n - i};
      hook.insert(hook.end(), static_cast<std::size_t>(i), 1);
      for (const auto& tau : partitions(n))
        EXPECT_EQ(character_value(ExtStdRep{n, i}, tau), character_value(IrreducibleRep{make_partition(hook)}, tau));
    }
    for (const auto& tau : partitions(n)) {
      EXPECT_EQ(character_value(SignRep{n}, tau), character_value(ExtStdRep{n, n - 1}, tau));
      EXPECT_EQ(character_value(YoungInducedRep{{n - 1, 1}}, tau),
                character_value(ExtStdRep{n, 0}, tau) + character_value(ExtStdRep{n, 1}, tau));
    }
  }
}

TEST(CharacterTest, SignAgainstTrivialIsOrthogonal) {
  for (int n = 2; n <= 8; ++n) {
    BigInt total = 0;
    for (const auto& tau : partitions(n))
      total += class_size(tau) * character_value(SignRep{n}, tau) * character_value(trivial_rep(n), tau);
    EXPECT_EQ(total, 0);
    EXPECT_EQ(invariant_dimension(SignRep{n}), 0);
    EXPECT_EQ(invariant_dimension(trivial_rep(n)), 1);
  }
}

TEST(CharacterTest, InvariantDimensionOfYoungModuleIsOne) {
  EXPECT_EQ(invariant_dimension(YoungInducedRep{{2, 1, 2}}), 1);
  EXPECT_EQ(invariant_dimension(ExtStdRep{4, 2}), 0);
  EXPECT_EQ(invariant_dimension(alternating_exterior_sum(5)), 1);
}

TEST(CharacterTest, MismatchedDegreeThrows) {
  EXPECT_THROW(character_value(SignRep{3}, make_partition({2, 2})), DomainError);
  EXPECT_THROW(validate(ExtStdRep{3, 3}), DomainError);
  EXPECT_THROW(validate(IrreducibleRep{Partition{{1, 2}}}), DomainError);
}

TEST(RepTextTest, RoundTrip) {
  for (const auto& rep : all_reps(4)) EXPECT_EQ(parse_rep(to_string(rep), 4), rep);
  EXPECT_EQ(parse_rep("triv", 3), trivial_rep(3));
  EXPECT_THROW(parse_rep("young:1,1", 3), DomainError);
  EXPECT_THROW(parse_rep("bogus", 3), DomainError);
}

TEST(FrobeniusTest, CycleTypes) {
  const FieldSpec F = FieldSpec::make(2);
  EXPECT_EQ(cycle_type_of_frobenius(P(F, {0, 1, 1})), make_partition({1, 1}));
  EXPECT_EQ(cycle_type_of_frobenius(P(F, {1, 1, 0, 1})), make_partition({3}));
  EXPECT_EQ(cycle_type_of_frobenius(P(F, {0, 1}) * P(F, {1, 1, 1})), make_partition({2, 1}));
  EXPECT_THROW(cycle_type_of_frobenius(P(F, {0, 0, 1})), DomainError);
}

TEST(FixedTupleTest, SpecExamples) {
  const FieldSpec F = FieldSpec::make(2);
  EXPECT_EQ(fixed_tuple_count(make_partition({1, 1}), factor(P(F, {0, 0, 1}))), 1);
  EXPECT_EQ(fixed_tuple_count(make_partition({2}), factor(P(F, {0, 0, 1}))), 1);
  EXPECT_EQ(fixed_tuple_count(make_partition({2}), factor(P(F, {1, 1, 1}))), 2);
  EXPECT_THROW(fixed_tuple_count(make_partition({2}), factor(P(F, {1, 1}))), DomainError);
}

TEST(FactorizationFunctionTest, SpecExamples) {
  const FieldSpec F = FieldSpec::make(2);
  // Squarefree f of cycle type [2,1].
  const Poly f = P(F, {0, 1}) * P(F, {1, 1, 1});
  EXPECT_EQ(factorization_function(SignRep{3}, f), -1);
  // T^3 + T = T (T+1)^2 over F_2: both monic linear polynomials divide it.
  const Poly g = P(F, {0, 1, 0, 1});
  int ordered = 0;
  for (const Poly& a : enumerate_monic(F, 1))
    for (const Poly& b : enumerate_monic(F, 2))
      if (a * b == g) ++ordered;
  EXPECT_EQ(ordered, 2);
  EXPECT_EQ(factorization_function(YoungInducedRep{{1, 2}}, g), ordered);
  EXPECT_EQ(factorization_function(trivial_rep(2), P(F, {0, 0, 1})), 1);
  EXPECT_THROW(factorization_function(SignRep{3}, P(F, {0, 1})), DomainError);
}

TEST(OracleTest, SpecExamples) {
  const FieldSpec F = FieldSpec::make(2);
  EXPECT_EQ(brute_force_Fpi(SignRep{2}, P(F, {0, 0, 1})), 0);
  EXPECT_EQ(brute_force_Fpi(trivial_rep(1), P(F, {0, 1})), 1);
  EXPECT_EQ(brute_force_Fpi(YoungInducedRep{{1, 1}}, P(F, {0, 1, 1})), 2);
  EXPECT_THROW(brute_force_Fpi(trivial_rep(7), Poly::monomial(F, 7, F.one())), DomainError);
}

TEST(OracleTest, AgreesWithClassAverageOverSmallFields) {
  for (auto [p, e, nmax] : {std::tuple{2u, 1u, 5}, {3u, 1u, 4}, {2u, 2u, 3}}) {
    const FieldSpec F = FieldSpec::make(p, e);
    for (int n = 1; n <= nmax; ++n) {
      const auto reps = all_reps(n);
      for (const Poly& f : enumerate_monic(F, n)) {
        const auto type = factor(f).type();
        for (const auto& rep : reps)
          ASSERT_EQ(factorization_function(rep, type), brute_force_Fpi(rep, f)) << to_string(rep) << " on " << f.to_string();
      }
    }
  }
}

TEST(FactorizationFunctionTest, SquarefreeValueIsCharacterOfFrobenius) {
  const FieldSpec F = FieldSpec::make(3);
  for (int n = 1; n <= 5; ++n) {
    const auto reps = all_reps(n);
    for (const Poly& f : enumerate_monic(F, n)) {
      const auto type = factor(f).type();
      if (!type.is_squarefree()) continue;
      const CycleType tau = cycle_type_of_frobenius(f);
      for (const auto& rep : reps) ASSERT_EQ(factorization_function(rep, type), character_value(rep, tau));
    }
  }
}

TEST(FactorizationFunctionTest, DependsOnlyOnFactorizationType) {
  for (std::uint32_t p : {2u, 3u}) {
    const FieldSpec F = FieldSpec::make(p);
    const int n = 6;
    const auto reps = all_reps(n);
    std::map<FactorizationType, std::vector<BigInt>> seen;
    for (const Poly& f : enumerate_monic(F, n)) {
      std::vector<BigInt> values;
      for (const auto& rep : reps) values.push_back(factorization_function(rep, f));
      auto [it, inserted] = seen.try_emplace(factor(f).type(), values);
      if (!inserted) ASSERT_EQ(it->second, values) << f.to_string();
    }
  }
}

TEST(FactorizationFunctionTest, AdditiveInTheRepresentation) {
  const FieldSpec F = FieldSpec::make(2);
  const VirtualRep v{{{2, SignRep{4}}, {-3, ExtStdRep{4, 1}}, {1, YoungInducedRep{{2, 2}}}, {5, IrreducibleRep{make_partition({2, 1, 1})}}}};
  for (const Poly& f : enumerate_monic(F, 4)) {
    BigInt sum = 0;
    for (const auto& [c, r] : v.terms) sum += c * factorization_function(r, f);
    EXPECT_EQ(factorization_function(v, f), sum);
  }
}

TEST(BettiBoundTest, FormulaInstances) {
  EXPECT_EQ(betti_bound(BettiKind::kInduced, 2, 1, 2), 192);
  EXPECT_EQ(betti_bound(BettiKind::kRegular, 2, 1), 192);
  EXPECT_EQ(betti_bound(BettiKind::kInduced, 1, 0, 1), 9);
  EXPECT_THROW(betti_bound(BettiKind::kInduced, 1, 2, 1), DomainError);
}

}  // namespace
}  // namespace ffsi
