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

#ifndef FFSI_INTERVAL_HPP
#define FFSI_INTERVAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ffsi/arith.hpp"
#include "ffsi/enumerate.hpp"
#include "ffsi/parallel.hpp"

namespace ffsi {

/// Exact sum of fn over I_c, factoring every member.
BigInt interval_sum(const ArithFnSpec& fn, const ShortIntervalSpec& spec, Budget budget = Budget::standard());

/// Expected value of the interval sum: q^{n-m} times the mean of fn.
Rational main_term(const ArithFnSpec& fn, const FieldSpec& field, int n, int m);
Rational main_term(const ArithFnSpec& fn, const ShortIntervalSpec& spec);

/// coefficient * q^{q_exponent_halves / 2}, held exactly.
struct ErrorBound {
  BigInt coefficient;
  int q_exponent_halves = 0;
  std::uint64_t q = 0;

  double approx() const;

  /// Exact test |err| <= bound, squaring both sides for odd exponents.
  bool admits(const Rational& err) const;

  /// |err| / bound in floating point.
  double ratio(const Rational& err) const;
};

ErrorBound error_bound(const ArithFnSpec& fn, const FieldSpec& field, int n, int m);
ErrorBound error_bound(const ArithFnSpec& fn, const ShortIntervalSpec& spec);

struct ScanMode {
  bool all = true;
  std::uint64_t count = 0;
  std::uint64_t seed = 0;

  static ScanMode all_c() { return {}; }
  static ScanMode sample(std::uint64_t count, std::uint64_t seed) { return {false, count, seed}; }

  /// "all" or "sample:N:SEED".
  std::string to_string() const;
  static ScanMode parse(std::string_view text);
};

struct ScanOptions {
  unsigned threads = default_threads();
  bool keep_per_c = false;
  Budget budget = Budget::standard();
};

struct IntervalRecord {
  std::uint64_t c_index = 0;
  BigInt sum;
  Rational error;
};

struct BoundReport {
  std::string fn;
  std::uint32_t p = 0;
  std::uint32_t e = 0;
  std::uint64_t q = 0;
  int n = 0;
  int m = 0;
  ScanMode mode;
  std::uint64_t intervals = 0;
  Rational main_term;
  Rational mean_sum;
  Rational worst_error;
  std::uint64_t worst_c_index = 0;
  std::vector<FieldElement> worst_c;
  ErrorBound bound;
  double ratio = 0.0;
  bool pass = false;
  std::vector<IntervalRecord> per_c;

  std::string verdict() const { return pass ? "PASS" : "FAIL"; }
  nlohmann::json to_json() const;

  /// One RFC 4180 row per scanned c; empty body unless per_c was kept.
  std::string to_csv(const FieldSpec& field) const;
};

/// max over scanned c of |interval sum - main term|, against error_bound.
/// Full scans read factorization types from a FactorTypeTable (needs
/// q^n <= budget); sampled scans factor each member of the drawn intervals.
BoundReport scan_worst_case(const ArithFnSpec& fn, const FieldSpec& field, int n, int m, const ScanMode& mode,
                            const ScanOptions& options = {});

/// Full scan reading types from a prebuilt table of degree n.
BoundReport scan_worst_case(const ArithFnSpec& fn, const FactorTypeTable& table, int m, const ScanOptions& options = {});

struct ScalingRow {
  int m = 0;
  Rational worst_error;
  double sqrt_scale = 0.0;
};

/// Worst errors next to q^{(n-m)/2} for each m; diagnostic only.
std::vector<ScalingRow> scaling_fit(const ArithFnSpec& fn, const FieldSpec& field, int n, const std::vector<int>& ms,
                                    const ScanOptions& options = {});

}  // namespace ffsi

#endif  // FFSI_INTERVAL_HPP
