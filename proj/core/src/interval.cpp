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

#include "ffsi/interval.hpp"

#include <charconv>
#include <cmath>
#include <random>

#include "ffsi/report.hpp"

namespace ffsi {
namespace {

Rational abs_rational(const Rational& x) { return x < 0 ? Rational(-x) : x; }

BigInt representation_bound(const RepSpec& rep, int n, int m) {
  if (const auto* y = std::get_if<YoungInducedRep>(&rep)) {
    return betti_bound(BettiKind::kInduced, n, m, static_cast<int>(y->blocks.size()));
  }
  return betti_bound(BettiKind::kRegular, n, m);
}

std::string c_text(const FieldSpec& field, const std::vector<FieldElement>& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ";";
    const auto coords = field.coeffs(c[i]);
    for (std::size_t j = 0; j < coords.size(); ++j) out += (j ? "," : "") + std::to_string(coords[j]);
  }
  return out;
}

nlohmann::json c_json(const FieldSpec& field, const std::vector<FieldElement>& c) {
  auto out = nlohmann::json::array();
  for (auto x : c) out.push_back(field.coeffs(x));
  return out;
}

std::uint64_t parse_u64(std::string_view text, const char* what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw DomainError(std::string("malformed ") + what + " '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

BigInt interval_sum(const ArithFnSpec& fn, const ShortIntervalSpec& spec, Budget budget) {
  validate(fn, spec.n);
  const MonicRange range = MonicRange::interval(spec, budget);
  BigInt total = 0;
  for (std::uint64_t i = 0; i < range.size(); ++i) total += evaluate(fn, range.at(i));
  return total;
}

Rational main_term(const ArithFnSpec& fn, const FieldSpec& field, int n, int m) {
  validate(fn, n);
  if (m < 0 || m > n) throw DomainError("main term needs 0 <= m <= n");
  const BigInt size = big_pow(field.q(), static_cast<unsigned>(n - m));
  if (const auto* d = std::get_if<DivisorK>(&fn)) {
    return Rational(binomial(static_cast<unsigned>(n + d->k - 1), static_cast<unsigned>(d->k - 1)) * size);
  }
  if (std::holds_alternative<DivisorRestricted>(fn)) return Rational(size);
  if (std::holds_alternative<Mobius>(fn)) return Rational(0);
  if (std::holds_alternative<VonMangoldt>(fn)) return Rational(size);
  return Rational(size * invariant_dimension(std::get<Fpi>(fn).rep));
}

Rational main_term(const ArithFnSpec& fn, const ShortIntervalSpec& spec) {
  spec.validate();
  return main_term(fn, spec.field, spec.n, spec.m);
}

double ErrorBound::approx() const {
  return coefficient.convert_to<double>() * std::pow(static_cast<double>(q), q_exponent_halves / 2.0);
}

bool ErrorBound::admits(const Rational& err) const {
  const Rational a = abs_rational(err);
  if (q_exponent_halves >= 0 && q_exponent_halves % 2 == 0) {
    return a <= Rational(coefficient * big_pow(q, static_cast<unsigned>(q_exponent_halves / 2)));
  }
  // a <= C q^{h/2}  <=>  a^2 <= C^2 q^h, both sides nonnegative.
  const Rational lhs = a * a;
  const Rational c2 = Rational(coefficient * coefficient);
  if (q_exponent_halves >= 0) return lhs <= c2 * Rational(big_pow(q, static_cast<unsigned>(q_exponent_halves)));
  return lhs * Rational(big_pow(q, static_cast<unsigned>(-q_exponent_halves))) <= c2;
}

double ErrorBound::ratio(const Rational& err) const { return abs_rational(err).convert_to<double>() / approx(); }

ErrorBound error_bound(const ArithFnSpec& fn, const FieldSpec& field, int n, int m) {
  validate(fn, n);
  if (m < 0 || m > n) throw DomainError("error bound needs 0 <= m <= n");
  ErrorBound b;
  b.q = field.q();
  const int p = static_cast<int>(field.p());
  b.q_exponent_halves = n - m + n / p - m / p + 1;
  if (const auto* d = std::get_if<DivisorK>(&fn)) {
    b.coefficient = binomial(static_cast<unsigned>(n + d->k - 1), static_cast<unsigned>(d->k - 1)) *
                    betti_bound(BettiKind::kInduced, n, m, d->k);
  } else if (const auto* d = std::get_if<DivisorRestricted>(&fn)) {
    b.coefficient = betti_bound(BettiKind::kInduced, n, m, static_cast<int>(d->parts.size()));
  } else if (std::holds_alternative<Mobius>(fn)) {
    b.coefficient = betti_bound(BettiKind::kRegular, n, m);
  } else if (std::holds_alternative<VonMangoldt>(fn)) {
    b.coefficient = 2 * betti_bound(BettiKind::kRegular, n, m);
  } else {
    b.coefficient = 0;
    for (const auto& [c, r] : std::get<Fpi>(fn).rep.terms) b.coefficient += BigInt(c < 0 ? -c : c) * representation_bound(r, n, m);
  }
  return b;
}

ErrorBound error_bound(const ArithFnSpec& fn, const ShortIntervalSpec& spec) {
  spec.validate();
  return error_bound(fn, spec.field, spec.n, spec.m);
}

std::string ScanMode::to_string() const {
  return all ? "all" : "sample:" + std::to_string(count) + ":" + std::to_string(seed);
}

ScanMode ScanMode::parse(std::string_view text) {
  if (text == "all") return all_c();
  if (text.starts_with("sample:")) {
    text.remove_prefix(7);
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw DomainError("sample mode needs sample:N:SEED");
    return sample(parse_u64(text.substr(0, colon), "sample count"), parse_u64(text.substr(colon + 1), "sample seed"));
  }
  throw DomainError("unknown scan mode '" + std::string(text) + "'");
}

namespace {

BoundReport assemble_report(const ArithFnSpec& fn, const FieldSpec& field, int n, int m, const ScanMode& mode,
                            const std::vector<std::uint64_t>& c_indices, const std::vector<BigInt>& sums,
                            const ScanOptions& options) {
  const Rational main = main_term(fn, field, n, m);
  const std::uint64_t scanned = sums.size();
  BoundReport r;
  r.fn = to_string(fn);
  r.p = field.p();
  r.e = field.e();
  r.q = field.q();
  r.n = n;
  r.m = m;
  r.mode = mode;
  r.intervals = scanned;
  r.main_term = main;
  r.bound = error_bound(fn, field, n, m);
  BigInt sum_of_sums = 0;
  bool first = true;
  for (std::uint64_t i = 0; i < scanned; ++i) {
    const std::uint64_t ci = mode.all ? i : c_indices[i];
    const Rational err = abs_rational(Rational(sums[i]) - main);
    sum_of_sums += sums[i];
    if (first || err > r.worst_error) {
      r.worst_error = err;
      r.worst_c_index = ci;
      first = false;
    }
    if (options.keep_per_c) r.per_c.push_back({ci, sums[i], Rational(sums[i]) - main});
  }
  r.mean_sum = Rational(sum_of_sums) / Rational(BigInt(scanned));
  r.worst_c = interval_coefficients(field, m, r.worst_c_index);
  r.ratio = r.bound.ratio(r.worst_error);
  r.pass = r.bound.admits(r.worst_error);
  return r;
}

}  // namespace

BoundReport scan_worst_case(const ArithFnSpec& fn, const FactorTypeTable& table, int m, const ScanOptions& options) {
  const int n = table.degree();
  validate(fn, n);
  if (m < 0 || m > n) throw DomainError("scan needs 0 <= m <= n");
  const std::uint64_t q = table.field().q();
  const std::uint64_t scanned = checked_pow(q, static_cast<unsigned>(m));
  const std::uint64_t size = checked_pow(q, static_cast<unsigned>(n - m));
  std::vector<std::int64_t> values;
  values.reserve(table.types().size());
  for (const auto& t : table.types()) values.push_back(to_int64(evaluate(fn, t)));
  const auto& ids = table.type_ids();
  std::vector<BigInt> sums(scanned);
  parallel_blocks(scanned, options.threads, [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t ci = begin; ci < end; ++ci) {
      std::int64_t s = 0;
      const std::uint64_t first = ci * size;
      for (std::uint64_t k = 0; k < size; ++k) s += values[ids[first + k]];
      sums[ci] = s;
    }
  });
  return assemble_report(fn, table.field(), n, m, ScanMode::all_c(), {}, sums, options);
}

BoundReport scan_worst_case(const ArithFnSpec& fn, const FieldSpec& field, int n, int m, const ScanMode& mode,
                            const ScanOptions& options) {
  validate(fn, n);
  if (m < 0 || m > n) throw DomainError("scan needs 0 <= m <= n");
  const std::uint64_t q = field.q();
  if (mode.all) {
    options.budget.require(checked_pow(q, static_cast<unsigned>(n)), "full interval scan");
    return scan_worst_case(fn, FactorTypeTable::build(field, n, options.budget), m, options);
  }
  const std::uint64_t total_intervals = checked_pow(q, static_cast<unsigned>(m));
  const std::uint64_t size = checked_pow(q, static_cast<unsigned>(n - m));
  if (mode.count == 0) throw DomainError("sample mode needs at least one interval");
  std::uint64_t work = mode.count;
  work = size != 0 && work > UINT64_MAX / size ? UINT64_MAX : work * size;
  options.budget.require(work, "sampled interval scan");
  std::mt19937_64 rng(mode.seed);
  std::vector<std::uint64_t> c_indices;
  for (std::uint64_t i = 0; i < mode.count; ++i) c_indices.push_back(rng() % total_intervals);
  std::vector<BigInt> sums(c_indices.size());
  parallel_blocks(c_indices.size(), options.threads, [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      const ShortIntervalSpec spec{field, n, m, interval_coefficients(field, m, c_indices[i])};
      sums[i] = interval_sum(fn, spec, options.budget);
    }
  });
  return assemble_report(fn, field, n, m, mode, c_indices, sums, options);
}

nlohmann::json BoundReport::to_json() const {
  const FieldSpec field = FieldSpec::make(p, e);
  nlohmann::json params = {{"fn", fn}, {"p", p}, {"e", e}, {"q", q}, {"n", n}, {"m", m}, {"mode", mode.to_string()},
                           {"intervals", intervals}};
  return {
      {"params", params},
      {"main_term", rational_json(main_term)},
      {"mean_sum", rational_json(mean_sum)},
      {"worst_error_num", numerator(worst_error).str()},
      {"worst_error_denom", denominator(worst_error).str()},
      {"worst_c", c_json(field, worst_c)},
      {"bound_coeff", bound.coefficient.str()},
      {"bound_q_exponent_halves", bound.q_exponent_halves},
      {"bound_approx", bound.approx()},
      {"ratio", ratio},
      {"verdict", verdict()},
  };
}

std::string BoundReport::to_csv(const FieldSpec& field) const {
  std::string out = csv_row({"c_index", "c", "sum", "main_term", "error_num", "error_den"});
  for (const auto& rec : per_c) {
    out += csv_row({std::to_string(rec.c_index), c_text(field, interval_coefficients(field, m, rec.c_index)),
                    rec.sum.str(), main_term.str(), numerator(rec.error).str(), denominator(rec.error).str()});
  }
  return out;
}

std::vector<ScalingRow> scaling_fit(const ArithFnSpec& fn, const FieldSpec& field, int n, const std::vector<int>& ms,
                                    const ScanOptions& options) {
  std::vector<ScalingRow> rows;
  for (int m : ms) {
    const BoundReport r = scan_worst_case(fn, field, n, m, ScanMode::all_c(), options);
    rows.push_back({m, r.worst_error, std::pow(static_cast<double>(field.q()), (n - m) / 2.0)});
  }
  return rows;
}

}  // namespace ffsi
