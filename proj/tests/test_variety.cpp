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

#include <cmath>
#include <set>

#include "ffsi/arith.hpp"
#include "ffsi/factor.hpp"
#include "ffsi/symmetric.hpp"
#include "ffsi/variety.hpp"

namespace ffsi {
namespace {

ShortIntervalSpec spec(const FieldSpec& F, int n, std::vector<std::int64_t> c) {
  std::vector<FieldElement> cc;
  for (auto x : c) cc.push_back(F.from_int(x));
  return {F, n, static_cast<int>(cc.size()), cc};
}

// Calls fn on every n-tuple over K.
template <typename Fn>
void for_each_tuple(const FieldSpec& K, int n, Fn&& fn) {
  std::vector<FieldElement> a(static_cast<std::size_t>(n), K.zero());
  const std::uint64_t total = checked_pow(K.q(), static_cast<unsigned>(n));
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t rest = code;
    for (auto& x : a) {
      x = FieldElement{static_cast<std::uint32_t>(rest % K.q())};
      rest /= K.q();
    }
    fn(a);
  }
}

// e_j(a) by the textbook recurrence, independent of the series code.
std::vector<FieldElement> elementary(const FieldSpec& K, const std::vector<FieldElement>& a, int m) {
  std::vector<FieldElement> e(static_cast<std::size_t>(m) + 1, K.zero());
  e[0] = K.one();
  for (auto x : a)
    for (int j = m; j >= 1; --j) e[static_cast<std::size_t>(j)] = K.add(e[static_cast<std::size_t>(j)], K.mul(x, e[static_cast<std::size_t>(j - 1)]));
  return e;
}

// Ordered root tuples of f over its base field: n!/prod(mult!) when f splits.
BigInt split_arrangements(const Poly& f) {
  const Factorization fz = factor(f);
  BigInt count = factorial(static_cast<unsigned>(f.degree()));
  for (const auto& fac : fz.factors) {
    if (fac.prime.degree() != 1) return 0;
    count /= factorial(static_cast<unsigned>(fac.multiplicity));
  }
  return count;
}

int rank_mod(const FieldSpec& F, std::vector<std::vector<FieldElement>> rows) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < rows.size() && rows[piv][col].value == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[static_cast<std::size_t>(rank)]);
    const auto& pr = rows[static_cast<std::size_t>(rank)];
    const FieldElement inv = F.inv(pr[col]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == static_cast<std::size_t>(rank) || rows[i][col].value == 0) continue;
      const FieldElement f = F.mul(rows[i][col], inv);
      for (std::size_t k = 0; k < cols; ++k) rows[i][k] = F.sub(rows[i][k], F.mul(f, pr[k]));
    }
    ++rank;
  }
  return rank;
}

TEST(CountXTest, SpecExamples) {
  const FieldSpec F3 = FieldSpec::make(3);
  EXPECT_EQ(count_points_X(spec(F3, 1, {})), 3);
  for (int c1 = 0; c1 < 3; ++c1) EXPECT_EQ(count_points_X(spec(F3, 2, {c1})), 3);
  // e_1 = 0, e_2 = c_2: ordered roots of T^2 + c_2.
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const FieldSpec F = FieldSpec::make(p);
    for (std::uint32_t c2 = 0; c2 < p; ++c2) {
      const Poly f = Poly::from_ints(F, {static_cast<std::int64_t>(c2), 0, 1});
      EXPECT_EQ(count_points_X(spec(F, 2, {0, c2})), split_arrangements(f)) << "p=" << p << " c2=" << c2;
    }
  }
}

TEST(CountXTest, MatchesSplitPolynomialsInInterval) {
  for (std::uint32_t p : {2u, 3u}) {
    const FieldSpec F = FieldSpec::make(p);
    for (int n = 1; n <= 6; ++n) {
      for (int m = 0; m <= n; ++m) {
        const std::uint64_t intervals = checked_pow(F.q(), static_cast<unsigned>(m));
        for (std::uint64_t ci = 0; ci < intervals; ++ci) {
          const ShortIntervalSpec s{F, n, m, interval_coefficients(F, m, ci)};
          BigInt oracle = 0;
          for (const Poly& f : enumerate_interval(s)) oracle += split_arrangements(f);
          ASSERT_EQ(count_points_X(s), oracle) << s.to_string();
        }
      }
    }
  }
}

TEST(CountXTest, MatchesDirectEnumerationOverExtensions) {
  for (std::uint32_t p : {2u, 3u}) {
    const FieldSpec F = FieldSpec::make(p);
    const FieldSpec K = extension_field(F, 2);
    for (int n = 2; n <= 4; ++n) {
      if (checked_pow(K.q(), static_cast<unsigned>(n)) > 10000) continue;
      for (int m = 1; m <= std::min(n, 2); ++m) {
        const ShortIntervalSpec s{F, n, m, interval_coefficients(F, m, 1)};
        BigInt oracle = 0;
        for_each_tuple(K, n, [&](const std::vector<FieldElement>& a) { oracle += lies_on_X(s, K, a) ? 1 : 0; });
        EXPECT_EQ(count_points_X(s, 2), oracle) << s.to_string();
      }
    }
  }
}

TEST(CountXTest, SignConvention) {
  const FieldSpec F = FieldSpec::make(5);
  for (std::uint64_t ci = 0; ci < 125; ++ci) {
    const ShortIntervalSpec s{F, 4, 3, interval_coefficients(F, 3, ci)};
    for (std::uint32_t a = 0; a < 5; ++a) {
      const std::vector<FieldElement> tuple{FieldElement{a}, F.zero(), F.zero(), F.zero()};
      const bool expected = s.c[0] == F.neg(FieldElement{a}) && s.c[1].value == 0 && s.c[2].value == 0;
      EXPECT_EQ(lies_on_X(s, F, tuple), expected);
      // e_1 = -c_1 through the independent recurrence.
      if (expected) EXPECT_EQ(elementary(F, tuple, 1)[1], F.neg(s.c[0]));
    }
  }
}

TEST(CountXTest, SignedElementarySymmetricDefinition) {
  const FieldSpec F = FieldSpec::make(3);
  for (std::uint64_t ci = 0; ci < 9; ++ci) {
    const ShortIntervalSpec s{F, 3, 2, interval_coefficients(F, 2, ci)};
    for_each_tuple(F, 3, [&](const std::vector<FieldElement>& a) {
      const auto e = elementary(F, a, 2);
      const bool direct = e[1] == F.neg(s.c[0]) && e[2] == s.c[1];
      EXPECT_EQ(lies_on_X(s, F, a), direct);
    });
  }
}

TEST(CountXTest, WeilDeviationBound) {
  for (std::uint32_t p : {2u, 3u}) {
    const FieldSpec F = FieldSpec::make(p);
    for (int n = 2; n <= 5; ++n) {
      for (int m = 1; m < n; ++m) {
        const ShortIntervalSpec s{F, n, m, interval_coefficients(F, m, checked_pow(F.q(), static_cast<unsigned>(m)) - 1)};
        for (int r = 1; r <= 2; ++r) {
          const std::uint64_t Q = checked_pow(F.q(), static_cast<unsigned>(r));
          if (checked_pow(Q, static_cast<unsigned>(n - m + 1)) > 200000) continue;
          const BigInt dev = abs(count_points_X(s, r) - big_pow(Q, static_cast<unsigned>(n - m)));
          const int P = static_cast<int>(p);
          const unsigned twice = static_cast<unsigned>(n - m + n / P - m / P + 1);
          const BigInt coeff = betti_bound(BettiKind::kRegular, n, m);
          EXPECT_LE(dev * dev, coeff * coeff * big_pow(Q, twice)) << s.to_string() << " r=" << r;
        }
      }
    }
  }
}

TEST(CountXTest, JacobianRankAwayFromR) {
  // Rank of d(e_1..e_m)/d(a) equals min(m, number of distinct values).
  const FieldSpec F = FieldSpec::make(3);
  const int n = 4;
  for (int m = 1; m <= 3; ++m) {
    for_each_tuple(F, n, [&](const std::vector<FieldElement>& a) {
      std::vector<std::vector<FieldElement>> rows(static_cast<std::size_t>(m), std::vector<FieldElement>(n));
      for (int i = 0; i < n; ++i) {
        std::vector<FieldElement> rest = a;
        rest.erase(rest.begin() + i);
        const auto e = elementary(F, rest, m - 1);
        for (int j = 1; j <= m; ++j) rows[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(j - 1)];
      }
      std::set<std::uint32_t> support;
      for (auto x : a) support.insert(x.value);
      EXPECT_EQ(rank_mod(F, rows), std::min<int>(m, static_cast<int>(support.size())));
    });
  }
}

TEST(CountXTest, BudgetIsEnforced) {
  const FieldSpec F = FieldSpec::make(3);
  EXPECT_THROW(count_points_X(spec(F, 6, {1}), 1, Budget{10}), BudgetExceeded);
}

TEST(QuotientTest, SpecExamples) {
  const FieldSpec F2 = FieldSpec::make(2);
  EXPECT_EQ(count_points_quotient(spec(F2, 2, {1}), {1, 1}), 2);
  const FieldSpec F3 = FieldSpec::make(3);
  EXPECT_EQ(count_points_quotient(spec(F3, 4, {1, 2}), {4}), 9);
}

TEST(QuotientTest, FullQuotientIsTheInterval) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const FieldSpec F = FieldSpec::make(q == 4 ? 2 : q, q == 4 ? 2 : 1);
    for (int n = 1; n <= 5; ++n)
      for (int m = 0; m <= n; ++m)
        for (int r = 1; r <= 2; ++r) {
          const ShortIntervalSpec s{F, n, m, interval_coefficients(F, m, 0)};
          EXPECT_EQ(count_points_quotient(s, {n}, r), big_pow(F.q(), static_cast<unsigned>(r * (n - m))));
        }
  }
}

TEST(QuotientTest, YoungQuotientSumsRestrictedDivisors) {
  const FieldSpec F = FieldSpec::make(3);
  const std::vector<std::vector<int>> block_sets{{1, 1, 1}, {2, 1}, {1, 2}, {3, 0}, {1, 1, 2}, {2, 2}};
  for (const auto& blocks : block_sets) {
    int n = 0;
    for (int b : blocks) n += b;
    for (int m = 0; m <= n; ++m) {
      for (std::uint64_t ci = 0; ci < checked_pow(3, static_cast<unsigned>(m)); ++ci) {
        const ShortIntervalSpec s{F, n, m, interval_coefficients(F, m, ci)};
        BigInt oracle = 0;
        for (const Poly& f : enumerate_interval(s)) oracle += divisor_restricted(f, blocks);
        EXPECT_EQ(count_points_quotient(s, blocks), oracle) << s.to_string();
      }
    }
  }
}

TEST(QuotientTest, RejectsBadBlocks) {
  const FieldSpec F = FieldSpec::make(2);
  EXPECT_THROW(count_points_quotient(spec(F, 3, {1}), {1, 1}), DomainError);
  EXPECT_THROW(count_points_quotient(spec(F, 3, {1}), {}), DomainError);
}

TEST(RConeTest, SpecExamples) {
  for (std::uint32_t p : {2u, 3u, 5u}) EXPECT_EQ(count_R_cone(FieldSpec::make(p), 2, 2), 1);
  EXPECT_EQ(count_R_cone(FieldSpec::make(2), 3, 2), 1);
}

TEST(RConeTest, MatchesDirectEnumeration) {
  for (std::uint32_t p : {2u, 3u}) {
    const FieldSpec F = FieldSpec::make(p);
    for (int r = 1; r <= 2; ++r) {
      const FieldSpec K = extension_field(F, r);
      for (int n = 1; n <= 5; ++n) {
        if (checked_pow(K.q(), static_cast<unsigned>(n)) > 20000) continue;
        for (int m = 1; m <= n; ++m) {
          BigInt oracle = 0;
          for_each_tuple(K, n, [&](const std::vector<FieldElement>& a) {
            std::set<std::uint32_t> support;
            for (auto x : a) support.insert(x.value);
            if (static_cast<int>(support.size()) > m - 1) return;
            const auto e = elementary(K, a, m);
            for (int j = 1; j <= m; ++j)
              if (e[static_cast<std::size_t>(j)].value != 0) return;
            ++oracle;
          });
          EXPECT_EQ(count_R_cone(F, n, m, r), oracle) << "p=" << p << " r=" << r << " n=" << n << " m=" << m;
        }
      }
    }
  }
}

TEST(RConeTest, SupportBoundEmptiesTheLocusAtMEqualsOne) {
  // |support| <= m - 1 = 0 admits no tuple, so the p constant tuples with
  // e_1 = p a = 0 are not counted.
  for (std::uint32_t p : {2u, 3u, 5u}) EXPECT_EQ(count_R_cone(FieldSpec::make(p), static_cast<int>(p), 1), 0);
  EXPECT_EQ(count_R_cone(FieldSpec::make(3), 3, 2), 3);
  EXPECT_EQ(count_R_cone(FieldSpec::make(5), 5, 2), 5);
}

TEST(RConeTest, SlopeRespectsDimensionBound) {
  const std::vector<std::tuple<std::uint32_t, int, int>> cases{{2, 4, 2}, {3, 3, 2}, {2, 4, 3}, {3, 6, 3}, {2, 6, 3}, {3, 4, 2}};
  for (auto [p, n, m] : cases) {
    const FieldSpec F = FieldSpec::make(p);
    std::vector<std::pair<int, BigInt>> counts;
    for (int r = 1; r <= 3; ++r) counts.emplace_back(r, count_R_cone(F, n, m, r));
    const double slope = dimension_fit(counts, F.q());
    const int P = static_cast<int>(p);
    EXPECT_LE(slope, n / P - m / P + 0.2) << "p=" << p << " n=" << n << " m=" << m;
  }
}

TEST(DimensionFitTest, Examples) {
  const FieldSpec F = FieldSpec::make(3);
  const CountReport line = count_report(spec(F, 2, {1}), VarietyTarget::kX, 3);
  ASSERT_EQ(line.counts.size(), 3u);
  EXPECT_EQ(line.counts[0].second, 3);
  EXPECT_EQ(line.counts[1].second, 9);
  EXPECT_EQ(line.counts[2].second, 27);
  EXPECT_NEAR(line.slope, 1.0, 1e-12);
  EXPECT_NEAR(dimension_fit({{1, 1}, {2, 1}, {3, 1}}, 5), 0.0, 1e-12);
  EXPECT_TRUE(std::isinf(dimension_fit({{1, 0}, {2, 0}}, 2)));
  EXPECT_THROW(dimension_fit({{1, 4}, {2, 0}}, 2), DomainError);
  const CountReport plane = count_report(spec(FieldSpec::make(2), 3, {1}), VarietyTarget::kX, 3);
  EXPECT_NEAR(plane.slope, 2.0, 1e-12);
}

TEST(DimensionFitTest, SpecimensNearExpectedDimension) {
  const std::vector<ShortIntervalSpec> specimens{spec(FieldSpec::make(3), 4, {1, 2}), spec(FieldSpec::make(5), 3, {1, 1}),
                                                 spec(FieldSpec::make(3), 5, {1, 1}), spec(FieldSpec::make(7), 3, {1, 2})};
  for (const auto& s : specimens) {
    const CountReport rep = count_report(s, VarietyTarget::kX, 3);
    EXPECT_NEAR(rep.slope, s.n - s.m, 0.2) << s.to_string();
  }
}

TEST(CountReportTest, JsonShape) {
  const CountReport rep = count_report(spec(FieldSpec::make(3), 2, {1}), VarietyTarget::kX, 2);
  const auto j = rep.to_json();
  for (const char* key : {"n", "m", "c", "q", "p", "counts", "reference", "slope"}) EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["counts"][1]["count"], "9");
  EXPECT_EQ(j["counts"][1]["reference"], "9");
  const auto empty = count_report(spec(FieldSpec::make(3), 3, {0}), VarietyTarget::kRCone, 2).to_json();
  EXPECT_TRUE(empty["slope"].is_null());
}

}  // namespace
}  // namespace ffsi
