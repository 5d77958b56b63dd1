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

#ifndef FFSI_VARIETY_HPP
#define FFSI_VARIETY_HPP

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "ffsi/enumerate.hpp"
#include "ffsi/numeric.hpp"

namespace ffsi {

/// F_{q^r} for the base field F_q.
FieldSpec extension_field(const FieldSpec& base, int r, Budget budget = Budget::standard());

/// Whether a tuple over `field` (an extension of spec.field of any degree)
/// satisfies prod (1 - u a_i) = 1 + c_1 u + ... + c_m u^m mod u^{m+1}.
bool lies_on_X(const ShortIntervalSpec& spec, const FieldSpec& field, const std::vector<FieldElement>& a);

/// Points over F_{q^r} of X_{n,m,c}: tuples (a_1..a_n) with
/// prod (1 - u a_i) = 1 + c_1 u + ... + c_m u^m mod u^{m+1}, that is
/// e_j(a) = (-1)^j c_j. Depth-first over coordinates with pruning once
/// fewer free coordinates remain than pinned coefficients; the last
/// coordinate is solved for.
BigInt count_points_X(const ShortIntervalSpec& spec, int r = 1, Budget budget = Budget::standard());

/// Points over F_{q^r} of X / (S_{n_1} x ... x S_{n_k}): ordered tuples of
/// monics of degrees n_i whose product lies in I_c. blocks = {n} is the
/// full S_n quotient, the interval itself.
BigInt count_points_quotient(const ShortIntervalSpec& spec, const std::vector<int>& blocks, int r = 1,
                             Budget budget = Budget::standard());

/// Points over F_{q^r} of the affine cone on R cap D: tuples with
/// e_1 = ... = e_m = 0 taking at most m - 1 distinct values. Counted by
/// choosing the value set and multiplicities.
BigInt count_R_cone(const FieldSpec& field, int n, int m, int r = 1, Budget budget = Budget::standard());

/// Least-squares slope of log(count) against r log q over the nonzero
/// counts; -infinity when every count is zero. Throws DomainError with
/// fewer than two nonzero counts.
double dimension_fit(const std::vector<std::pair<int, BigInt>>& counts, std::uint64_t q);

enum class VarietyTarget { kX, kQuotient, kRCone };

struct CountReport {
  std::uint32_t p = 0;
  std::uint32_t e = 0;
  std::uint64_t q = 0;
  int n = 0;
  int m = 0;
  std::vector<FieldElement> c;
  std::string target;
  std::vector<std::pair<int, BigInt>> counts;
  /// q^{r(n-m)} per r for X and quotients; empty for the R cone.
  std::vector<BigInt> reference;
  /// n - m for X and quotients, floor(n/p) - floor(m/p) for the R cone.
  int expected_dimension = 0;
  double slope = 0.0;

  nlohmann::json to_json() const;
};

/// Counts for r = 1..ext_max with reference values and a dimension fit.
/// blocks is used only for the quotient target.
CountReport count_report(const ShortIntervalSpec& spec, VarietyTarget target, int ext_max,
                         const std::vector<int>& blocks = {}, Budget budget = Budget::standard());

}  // namespace ffsi

#endif  // FFSI_VARIETY_HPP
