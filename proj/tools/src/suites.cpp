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

#include "ffsi/cli/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

#include "ffsi/arith.hpp"
#include "ffsi/factor.hpp"
#include "ffsi/interval.hpp"
#include "ffsi/lfunc.hpp"
#include "ffsi/report.hpp"
#include "ffsi/symmetric.hpp"
#include "ffsi/variety.hpp"

namespace ffsi::cli {
namespace {

std::string fmt(double x) {
  std::ostringstream s;
  s << std::setprecision(6) << x;
  return s.str();
}

std::string fmt(Complex z) {
  if (std::abs(z.imag()) < 1e-12) return fmt(z.real());
  return fmt(z.real()) + (z.imag() < 0 ? "-" : "+") + fmt(std::abs(z.imag())) + "i";
}

FieldSpec field_of_size(std::uint32_t q) {
  for (std::uint32_t p = 2; p <= q; ++p) {
    std::uint32_t e = 1;
    for (std::uint64_t pe = p; pe <= q; pe *= p, ++e)
      if (pe == q) return FieldSpec::make(p, e);
  }
  throw DomainError("no field of size " + std::to_string(q));
}

// Accumulates cases for one reported check and remembers the first failure.
class Tally {
 public:
  Tally(std::string suite, int criterion, std::string name)
      : suite_(std::move(suite)), criterion_(criterion), name_(std::move(name)) {}

  void check(bool ok, const std::function<std::string()>& describe) {
    ++cases_;
    if (!ok) {
      ++failures_;
      if (!first_failure_) first_failure_ = describe();
    }
  }

  void note(std::string text) { notes_.push_back(std::move(text)); }
  std::uint64_t cases() const noexcept { return cases_; }

  CheckResult result(bool informational = false) const {
    CheckResult r{suite_, criterion_, name_, failures_ == 0 && cases_ > 0, informational, {}};
    std::ostringstream d;
    d << cases_ << " cases";
    if (failures_) d << ", " << failures_ << " failed; first: " << *first_failure_;
    for (const auto& n : notes_) d << "; " << n;
    r.detail = d.str();
    return r;
  }

 private:
  std::string suite_;
  int criterion_;
  std::string name_;
  std::uint64_t cases_ = 0;
  std::uint64_t failures_ = 0;
  std::optional<std::string> first_failure_;
  std::vector<std::string> notes_;
};

// Histogram of factorization-type ids over all monic polynomials of degree n.
std::vector<std::uint64_t> type_counts(const FactorTypeTable& table) {
  std::vector<std::uint64_t> counts(table.types().size(), 0);
  for (auto id : table.type_ids()) ++counts[id];
  return counts;
}

std::vector<std::vector<int>> all_compositions(int n) {
  std::vector<std::vector<int>> out;
  for (int k = 1; k <= n; ++k)
    for (auto& c : compositions(n, k, false)) out.push_back(std::move(c));
  return out;
}

// ---------------------------------------------------------------------------

void identities(std::vector<CheckResult>& out) {
  const std::string suite = "identities";
  Tally lambda(suite, 1, "sum_lambda_equals_q_pow_n");
  Tally mu(suite, 1, "sum_mobius_vanishes");
  Tally dk(suite, 1, "sum_dk_equals_binomial_q_pow_n");
  for (std::uint32_t q : {2u, 3u, 5u}) {
    const FieldSpec F = FieldSpec::make(q);
    for (int n = 1; n <= 8; ++n) {
      const FactorTypeTable table = FactorTypeTable::build(F, n);
      const auto counts = type_counts(table);
      const auto& types = table.types();
      BigInt sl = 0, sm = 0;
      std::vector<BigInt> sd(5, 0);
      for (std::size_t t = 0; t < types.size(); ++t) {
        sl += BigInt(counts[t]) * mangoldt(types[t]);
        sm += BigInt(counts[t]) * mobius(types[t]);
        for (int k = 1; k <= 4; ++k) sd[static_cast<std::size_t>(k)] += BigInt(counts[t]) * divisor_k(types[t], k);
      }
      const BigInt qn = big_pow(q, static_cast<unsigned>(n));
      const std::string where = "q=" + std::to_string(q) + " n=" + std::to_string(n);
      lambda.check(sl == qn, [&] { return where + ": " + sl.str() + " != " + qn.str(); });
      if (n >= 2) mu.check(sm == 0, [&] { return where + ": " + sm.str(); });
      for (int k = 1; k <= 4; ++k) {
        const BigInt expected = binomial(static_cast<unsigned>(n + k - 1), static_cast<unsigned>(k - 1)) * qn;
        dk.check(sd[static_cast<std::size_t>(k)] == expected, [&] {
          return where + " k=" + std::to_string(k) + ": " + sd[static_cast<std::size_t>(k)].str() + " != " + expected.str();
        });
      }
    }
  }
  out.push_back(lambda.result());
  out.push_back(mu.result());
  out.push_back(dk.result());

  Tally table_check(suite, 3, "type_table_matches_factor");
  Tally fac_mobius(suite, 3, "mobius_is_signed_sign_function");
  Tally fac_von(suite, 3, "lambda_is_alternating_exterior_sum");
  Tally fac_div(suite, 3, "restricted_divisor_is_induced_function");
  Tally relation(suite, 3, "divisor_relation");
  std::uint64_t polys = 0;
  for (std::uint32_t q : {2u, 3u}) {
    const FieldSpec F = FieldSpec::make(q);
    for (int n = 1; n <= 6; ++n) {
      const FactorTypeTable table = FactorTypeTable::build(F, n);
      const VirtualRep alt = alternating_exterior_sum(n);
      const auto comps = all_compositions(n);
      std::vector<std::vector<std::vector<int>>> zero_comps(5);
      for (int k = 1; k <= 4; ++k) zero_comps[static_cast<std::size_t>(k)] = compositions(n, k, true);
      // Per type verdicts, then every polynomial is charged with its type.
      std::vector<std::optional<std::string>> type_failure(table.types().size());
      std::vector<std::array<bool, 4>> type_ok(table.types().size());
      for (std::size_t t = 0; t < table.types().size(); ++t) {
        const auto& type = table.types()[t];
        const std::string where = "q=" + std::to_string(q) + " type " + type.to_string();
        const int sign = n % 2 == 0 ? 1 : -1;
        type_ok[t][0] = mobius(type) == sign * factorization_function(SignRep{n}, type);
        type_ok[t][1] = BigInt(mangoldt(type)) == factorization_function(alt, type);
        type_ok[t][2] = std::all_of(comps.begin(), comps.end(), [&](const std::vector<int>& nu) {
          return divisor_restricted(type, nu) == factorization_function(YoungInducedRep{nu}, type);
        });
        bool rel = true;
        for (int k = 1; k <= 4; ++k) {
          BigInt sum = 0;
          for (const auto& nu : zero_comps[static_cast<std::size_t>(k)]) sum += divisor_restricted(type, nu);
          rel = rel && sum == divisor_k(type, k);
        }
        type_ok[t][3] = rel;
        type_failure[t] = where;
      }
      for (std::uint64_t idx = 0; idx < table.size(); ++idx) {
        ++polys;
        const Poly f = monic_at(F, n, idx);
        const auto id = table.type_id(idx);
        table_check.check(factor(f).type() == table.types()[id], [&] { return f.to_string(); });
        const auto& ok = type_ok[id];
        fac_mobius.check(ok[0], [&] { return *type_failure[id]; });
        fac_von.check(ok[1], [&] { return *type_failure[id]; });
        fac_div.check(ok[2], [&] { return *type_failure[id]; });
        relation.check(ok[3], [&] { return *type_failure[id]; });
      }
    }
  }
  for (auto* t : {&table_check, &fac_mobius, &fac_von, &fac_div, &relation}) out.push_back(t->result());
}

void facfun_oracle(std::vector<CheckResult>& out) {
  Tally oracle("facfun-oracle", 2, "factorization_function_matches_brute_force");
  for (std::uint32_t q : {2u, 3u}) {
    const FieldSpec F = FieldSpec::make(q);
    for (int n = 1; n <= 5; ++n) {
      std::vector<RepSpec> reps{SignRep{n}};
      for (int i = 0; i < n; ++i) reps.push_back(ExtStdRep{n, i});
      for (auto& nu : all_compositions(n)) reps.push_back(YoungInducedRep{nu});
      for (const auto& lambda : partitions(n)) reps.push_back(IrreducibleRep{lambda});
      for (const Poly& f : enumerate_monic(F, n)) {
        for (const auto& rep : reps) {
          const BigInt fast = factorization_function(rep, f);
          const BigInt slow = brute_force_Fpi(rep, f);
          oracle.check(fast == slow, [&] {
            return "q=" + std::to_string(q) + " " + f.to_string() + " " + to_string(rep) + ": " + fast.str() +
                   " != " + slow.str();
          });
        }
      }
    }
  }
  out.push_back(oracle.result());
}

void bounds(std::vector<CheckResult>& out, const SuiteOptions& options) {
  const std::string suite = "bounds";
  std::map<std::string, Tally> tallies;
  std::map<std::string, double> worst;
  const std::vector<std::string> kinds{"divisor_k", "divisor_restricted", "mobius", "lambda"};
  for (const auto& k : kinds) tallies.emplace(k, Tally(suite, 4, "bound_" + k));
  ScanOptions scan;
  if (options.threads) scan.threads = options.threads;
  std::uint64_t skipped = 0;
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const FieldSpec F = field_of_size(q);
    for (int n = 2; n <= 8; ++n) {
      if (!scan.budget.allows(checked_pow(q, static_cast<unsigned>(n)))) {
        skipped += static_cast<std::uint64_t>(n - 1);
        continue;
      }
      const FactorTypeTable table = FactorTypeTable::build(F, n, scan.budget);
      std::vector<std::pair<std::string, ArithFnSpec>> fns{
          {"divisor_k", DivisorK{1}}, {"divisor_k", DivisorK{2}}, {"divisor_k", DivisorK{3}},
          {"mobius", Mobius{}},       {"lambda", VonMangoldt{}}};
      for (const auto& nu : partitions(n)) fns.emplace_back("divisor_restricted", DivisorRestricted{nu.parts});
      for (int m = 1; m < n; ++m) {
        for (const auto& [kind, fn] : fns) {
          const BoundReport r = scan_worst_case(fn, table, m, scan);
          tallies.at(kind).check(r.pass, [&] {
            return "q=" + std::to_string(q) + " n=" + std::to_string(n) + " m=" + std::to_string(m) + " " + r.fn +
                   " ratio " + fmt(r.ratio);
          });
          worst[kind] = std::max(worst[kind], r.ratio);
        }
      }
    }
  }
  for (const auto& k : kinds) {
    auto& t = tallies.at(k);
    t.note("worst ratio " + fmt(worst[k]));
    if (skipped) t.note(std::to_string(skipped) + " (q,n,m) skipped by budget");
    out.push_back(t.result());
  }
}

void variety(std::vector<CheckResult>& out) {
  const std::string suite = "variety";
  Tally quotient(suite, 5, "quotient_full_equals_q_pow");
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const FieldSpec F = field_of_size(q);
    for (int n = 1; n <= 5; ++n)
      for (int m = 0; m <= n; ++m) {
        const std::uint64_t cs = std::min<std::uint64_t>(checked_pow(q, static_cast<unsigned>(m)), 125);
        for (std::uint64_t ci = 0; ci < cs; ++ci) {
          const ShortIntervalSpec s{F, n, m, interval_coefficients(F, m, ci)};
          for (int r = 1; r <= 3; ++r) {
            const BigInt got = count_points_quotient(s, {n}, r);
            const BigInt want = big_pow(q, static_cast<unsigned>(r * (n - m)));
            quotient.check(got == want, [&] { return s.to_string() + " r=" + std::to_string(r) + ": " + got.str(); });
          }
        }
      }
  }
  out.push_back(quotient.result());

  Tally xoracle(suite, 5, "points_of_X_match_split_interval_members");
  for (std::uint32_t q : {2u, 3u}) {
    const FieldSpec F = FieldSpec::make(q);
    for (int n = 1; n <= 6; ++n) {
      const FactorTypeTable table = FactorTypeTable::build(F, n);
      // Ordered root tuples per type: n!/prod(mult!) when every factor is linear.
      std::vector<BigInt> arrangements;
      for (const auto& type : table.types()) {
        BigInt a = factorial(static_cast<unsigned>(n));
        for (auto [d, e] : type.parts) a = d == 1 ? BigInt(a / factorial(static_cast<unsigned>(e))) : BigInt(0);
        arrangements.push_back(a);
      }
      for (int m = 0; m <= n; ++m) {
        const std::uint64_t size = checked_pow(q, static_cast<unsigned>(n - m));
        for (std::uint64_t ci = 0; ci < checked_pow(q, static_cast<unsigned>(m)); ++ci) {
          BigInt oracle = 0;
          for (std::uint64_t k = 0; k < size; ++k) oracle += arrangements[table.type_id(ci * size + k)];
          const ShortIntervalSpec s{F, n, m, interval_coefficients(F, m, ci)};
          const BigInt got = count_points_X(s);
          xoracle.check(got == oracle, [&] { return s.to_string() + ": " + got.str() + " != " + oracle.str(); });
        }
      }
    }
  }
  out.push_back(xoracle.result());

  Tally weil(suite, 5, "weil_deviation_bound");
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const FieldSpec F = field_of_size(q);
    const int p = static_cast<int>(F.p());
    for (int n = 2; n <= 5; ++n)
      for (int m = 1; m < n; ++m) {
        const ShortIntervalSpec s{F, n, m, interval_coefficients(F, m, checked_pow(q, static_cast<unsigned>(m)) - 1)};
        for (int r = 1; r <= 2; ++r) {
          const std::uint64_t Q = checked_pow(q, static_cast<unsigned>(r));
          if (checked_pow(Q, static_cast<unsigned>(n - m + 1)) > 200000) continue;
          const BigInt dev = abs(count_points_X(s, r) - big_pow(Q, static_cast<unsigned>(n - m)));
          const BigInt coeff = betti_bound(BettiKind::kRegular, n, m);
          const unsigned halves = static_cast<unsigned>(n - m + n / p - m / p + 1);
          weil.check(dev * dev <= coeff * coeff * big_pow(Q, halves),
                     [&] { return s.to_string() + " r=" + std::to_string(r) + " deviation " + dev.str(); });
        }
      }
  }
  out.push_back(weil.result());

  Tally fit(suite, 5, "dimension_fit_of_X");
  const auto make = [](std::uint32_t p, int n, std::vector<std::int64_t> c) {
    const FieldSpec F = FieldSpec::make(p);
    std::vector<FieldElement> cc;
    for (auto x : c) cc.push_back(F.from_int(x));
    return ShortIntervalSpec{F, n, static_cast<int>(cc.size()), cc};
  };
  for (const auto& s : {make(3, 4, {1, 2}), make(5, 3, {1, 1}), make(3, 5, {1, 1})}) {
    const CountReport rep = count_report(s, VarietyTarget::kX, 3);
    fit.check(std::abs(rep.slope - (s.n - s.m)) <= 0.2, [&] { return s.to_string() + " slope " + fmt(rep.slope); });
    fit.note(s.to_string() + " slope " + fmt(rep.slope));
  }
  out.push_back(fit.result());

  Tally cone(suite, 5, "r_cone_slope_bound");
  const std::vector<std::tuple<std::uint32_t, int, int>> cone_cases{{2, 4, 2}, {3, 3, 2}, {2, 4, 3},
                                                                   {3, 6, 3}, {2, 6, 3}, {3, 4, 2}};
  for (auto [p, n, m] : cone_cases) {
    std::vector<std::pair<int, BigInt>> counts;
    for (int r = 1; r <= 3; ++r) counts.emplace_back(r, count_R_cone(FieldSpec::make(p), n, m, r));
    const double slope = dimension_fit(counts, p);
    const int P = static_cast<int>(p);
    const std::string where = "p=" + std::to_string(p) + " n=" + std::to_string(n) + " m=" + std::to_string(m);
    cone.check(slope <= n / P - m / P + 0.2, [&] { return where + " slope " + fmt(slope); });
  }
  out.push_back(cone.result());

  Tally degenerate(suite, 5, "r_cone_degeneracy_n_eq_p_m_eq_1");
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const BigInt count = count_R_cone(FieldSpec::make(p), static_cast<int>(p), 1);
    degenerate.check(count >= p, [&] {
      return "p=" + std::to_string(p) + " count " + count.str() + " < " + std::to_string(p) +
             " (support size <= m-1 = 0 leaves R empty)";
    });
  }
  out.push_back(degenerate.result());

  Tally corrected(suite, 5, "r_cone_degeneracy_n_eq_p_m_eq_2");
  for (std::uint32_t p : {3u, 5u}) {
    const BigInt count = count_R_cone(FieldSpec::make(p), static_cast<int>(p), 2);
    corrected.check(count == p, [&] { return "p=" + std::to_string(p) + " count " + count.str(); });
  }
  out.push_back(corrected.result(true));
}

void lfunc(std::vector<CheckResult>& out, const SuiteOptions& options) {
  const std::string suite = "lfunc";
  Tally sizes(suite, 6, "family_size");
  Tally vanish(suite, 6, "l_coefficients_vanish_from_degree_m");
  for (std::uint32_t q : {2u, 3u, 5u}) {
    for (int m = 1; m <= 3; ++m) {
      const FieldSpec F = FieldSpec::make(q);
      if (!Budget::standard().allows(checked_pow((q - 1) * checked_pow(q, static_cast<unsigned>(m)), 2))) continue;
      const auto family = enumerate_characters(F, m, true, true);
      const std::uint64_t qm = checked_pow(q, static_cast<unsigned>(m));
      const std::string where = "q=" + std::to_string(q) + " m=" + std::to_string(m);
      sizes.check(family.size() == qm - qm / q, [&] { return where + ": " + std::to_string(family.size()); });
      for (const auto& chi : family) {
        bool ok = true;
        try {
          l_polynomial(chi);
          l_polynomial_chi(chi);
        } catch (const ConsistencyError&) {
          ok = false;
        }
        vanish.check(ok, [&] { return where + " character " + std::to_string(chi.id); });
      }
    }
  }
  out.push_back(sizes.result());
  out.push_back(vanish.result());

  Tally eps(suite, 6, "epsilon_unit_modulus");
  Tally fe(suite, 6, "functional_equation");
  Tally literal(suite, 6, "functional_equation_literal_exponent");
  double max_res = 0.0;
  double max_literal = 0.0;
  for (int m = 1; m <= 3; ++m) {
    for (const auto& chi : enumerate_characters(FieldSpec::make(3), m, true, true)) {
      const std::string where = "q=3 m=" + std::to_string(m) + " character " + std::to_string(chi.id);
      const EpsilonFactor e = epsilon_factor(chi);
      eps.check(e.unit_exact && std::abs(std::abs(e.value) - 1.0) < 1e-9, [&] { return where; });
      const auto res = check_functional_equation(chi);
      fe.check(res.residual < 1e-9, [&] { return where + " residual " + fmt(res.residual); });
      literal.check(res.literal_residual < 1e-9, [&] { return where + " residual " + fmt(res.literal_residual); });
      max_res = std::max(max_res, res.residual);
      max_literal = std::max(max_literal, res.literal_residual);
    }
  }
  fe.note("max residual " + fmt(max_res));
  literal.note("max residual " + fmt(max_literal) + " with q^{(m-1)(s-1/2)}");
  out.push_back(eps.result());
  out.push_back(fe.result());
  out.push_back(literal.result(true));

  Tally sums(suite, 6, "average_of_characters");
  {
    const FieldSpec F = FieldSpec::make(3);
    const auto family = enumerate_characters(F, 2, true, true);
    for (int n = 0; n <= 5; ++n)
      for (const Poly& f : enumerate_monic(F, n)) {
        const auto c = character_sum_identity(family, f);
        sums.check(c.pass, [&] { return f.to_string(); });
      }
  }
  out.push_back(sums.result());

  const unsigned threads = options.threads;
  Tally m1(suite, 7, "m1_moment_equals_psi_main_term");
  for (std::uint32_t q : {3u, 5u}) {
    for (int r = 0; r <= 3; ++r) {
      const auto rep = moment(FieldSpec::make(q), 1, std::vector<Complex>(static_cast<std::size_t>(r), 0.0), 0, 16.0,
                              Budget::standard(), threads);
      m1.check(rep.deviation < 1e-12, [&] {
        return "q=" + std::to_string(q) + " r=" + std::to_string(r) + ": value " + fmt(rep.value) + ", main term " +
               fmt(rep.main_term) + " (L(s,psi) = 1 at m = 1)";
      });
    }
  }
  out.push_back(m1.result());

  Tally bound(suite, 7, "moment_bound_m2");
  Tally chipsi(suite, 7, "chi_psi_comparison");
  const std::vector<Complex> shifts{{0.0, 0.0}, {0.25, 0.5}};
  for (std::uint32_t q : {3u, 5u}) {
    for (int r = 1; r <= 2; ++r) {
      for (int s = 0; s <= 1; ++s) {
        const std::vector<Complex> alphas(shifts.begin(), shifts.begin() + r);
        const auto rep = moment(FieldSpec::make(q), 2, alphas, s, 16.0, Budget::standard(), threads);
        const std::string where = "q=" + std::to_string(q) + " r=" + std::to_string(r) + " s=" + std::to_string(s);
        bound.check(rep.verdict != MomentVerdict::kFail, [&] { return where + " ratio " + fmt(rep.ratio); });
        bound.note(where + " " + to_string(rep.verdict) + " ratio " + fmt(rep.ratio));
        Complex factor = 1.0;
        for (auto a : alphas) factor *= 1.0 - std::pow(static_cast<double>(q), -(0.5 + a));
        const double gap = std::abs(rep.chi_value - rep.value * factor);
        chipsi.check(gap < 1e-9, [&] { return where + " gap " + fmt(gap); });
      }
    }
  }
  out.push_back(bound.result());
  out.push_back(chipsi.result());
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"identities", "facfun-oracle", "bounds", "variety", "lfunc"};
  return names;
}

bool is_suite(const std::string& name) {
  return name == "all" || std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end();
}

std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& options) {
  if (!is_suite(name)) throw DomainError("unknown suite '" + name + "'");
  std::vector<CheckResult> out;
  const auto want = [&](const char* s) { return name == "all" || name == s; };
  if (want("identities")) identities(out);
  if (want("facfun-oracle")) facfun_oracle(out);
  if (want("bounds")) bounds(out, options);
  if (want("variety")) variety(out);
  if (want("lfunc")) lfunc(out, options);
  return out;
}

std::map<int, bool> criterion_verdicts(const std::vector<CheckResult>& results) {
  std::map<int, bool> v;
  for (const auto& r : results) {
    if (r.informational) continue;
    auto [it, inserted] = v.emplace(r.criterion, r.pass);
    if (!inserted) it->second = it->second && r.pass;
  }
  return v;
}

bool all_pass(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.informational || r.pass; });
}

nlohmann::json results_json(const std::string& suite, const std::vector<CheckResult>& results) {
  auto checks = nlohmann::json::array();
  for (const auto& r : results) {
    checks.push_back({{"suite", r.suite},
                      {"criterion", r.criterion},
                      {"name", r.name},
                      {"verdict", r.pass ? "PASS" : "FAIL"},
                      {"informational", r.informational},
                      {"detail", r.detail}});
  }
  nlohmann::json criteria = nlohmann::json::object();
  for (auto [c, ok] : criterion_verdicts(results)) criteria[std::to_string(c)] = ok ? "PASS" : "FAIL";
  return {{"suite", suite}, {"checks", checks}, {"criteria", criteria}, {"pass", all_pass(results)}};
}

std::string results_csv(const std::vector<CheckResult>& results) {
  std::string out = csv_row({"criterion", "suite", "check", "verdict", "informational", "detail"});
  for (const auto& r : results) {
    out += csv_row({std::to_string(r.criterion), r.suite, r.name, r.pass ? "PASS" : "FAIL",
                    r.informational ? "yes" : "no", r.detail});
  }
  return out;
}

std::string results_table(const std::vector<CheckResult>& results) {
  std::size_t wide = 5;
  for (const auto& r : results) wide = std::max(wide, r.name.size());
  std::ostringstream s;
  s << std::left << std::setw(4) << "crit" << "  " << std::setw(static_cast<int>(wide)) << "check" << "  "
    << std::setw(7) << "verdict" << "  detail\n";
  for (const auto& r : results) {
    const std::string verdict = r.informational ? (r.pass ? "info" : "info!") : (r.pass ? "PASS" : "FAIL");
    s << std::left << std::setw(4) << r.criterion << "  " << std::setw(static_cast<int>(wide)) << r.name << "  "
      << std::setw(7) << verdict << "  " << r.detail << "\n";
  }
  return s.str();
}

}  // namespace ffsi::cli
