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

#ifndef FFSI_SYMMETRIC_HPP
#define FFSI_SYMMETRIC_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "ffsi/factor.hpp"
#include "ffsi/numeric.hpp"

namespace ffsi {

/// A partition of n, parts in descending order.
struct Partition {
  std::vector<int> parts;

  int size() const noexcept;
  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// Conjugacy classes of S_n are labelled by their cycle type.
using CycleType = Partition;

/// Sorts descending and drops zeros; throws DomainError on negative parts.
Partition make_partition(std::vector<int> parts);

/// All partitions of n in descending lexicographic order, [n] first.
const std::vector<Partition>& partitions(int n);

/// z_tau = prod_l l^{m_l} m_l!, the centralizer order.
BigInt centralizer_order(const CycleType& tau);

/// n! / z_tau.
BigInt class_size(const CycleType& tau);

struct SignRep {
  int n = 0;
  friend auto operator<=>(const SignRep&, const SignRep&) = default;
};

/// The i-th exterior power of the standard (n-1)-dimensional representation.
struct ExtStdRep {
  int n = 0;
  int i = 0;
  friend auto operator<=>(const ExtStdRep&, const ExtStdRep&) = default;
};

/// Permutation representation on ordered set partitions with block sizes
/// n_1, ..., n_k; zero-size blocks are allowed and contribute nothing.
struct YoungInducedRep {
  std::vector<int> blocks;
  friend auto operator<=>(const YoungInducedRep&, const YoungInducedRep&) = default;
};

/// The Specht module of shape lambda.
struct IrreducibleRep {
  Partition shape;
  friend auto operator<=>(const IrreducibleRep&, const IrreducibleRep&) = default;
};

using RepSpec = std::variant<SignRep, ExtStdRep, YoungInducedRep, IrreducibleRep>;

/// Throws DomainError on inconsistent parameters.
void validate(const RepSpec& rep);

/// The n of S_n the representation lives on.
int rep_n(const RepSpec& rep);

RepSpec trivial_rep(int n);

/// Text form relative to a known n: sign, triv, extstd:i, young:n1,..,nk, irr:l1,..,lr.
std::string to_string(const RepSpec& rep);
RepSpec parse_rep(std::string_view text, int n);

/// Integer combination of representations of the same S_n.
struct VirtualRep {
  std::vector<std::pair<std::int64_t, RepSpec>> terms;

  int n() const;
  std::string to_string() const;
};

/// sum_i (-1)^i ext^i(std), whose factorization function is Lambda.
VirtualRep alternating_exterior_sum(int n);

std::int64_t character_value(const RepSpec& rep, const CycleType& tau);
std::int64_t character_value(const VirtualRep& rep, const CycleType& tau);

/// <chi, 1>.
std::int64_t invariant_dimension(const RepSpec& rep);
std::int64_t invariant_dimension(const VirtualRep& rep);

/// Degrees of the irreducible factors of a squarefree monic polynomial.
/// Throws DomainError when f is not squarefree.
CycleType cycle_type_of_frobenius(const Poly& f);

/// Root tuples of a polynomial of the given factorization type that are
/// fixed by Frob composed with a permutation of cycle type tau.
BigInt fixed_tuple_count(const CycleType& tau, const FactorizationType& type);
BigInt fixed_tuple_count(const CycleType& tau, const Factorization& fact);

/// F_pi as an average over conjugacy classes; throws ConsistencyError if
/// the average is not an integer.
BigInt factorization_function(const RepSpec& rep, const FactorizationType& type);
BigInt factorization_function(const VirtualRep& rep, const FactorizationType& type);
BigInt factorization_function(const RepSpec& rep, const Poly& f);
BigInt factorization_function(const VirtualRep& rep, const Poly& f);

/// F_pi computed from the splitting field: enumerates root tuples,
/// permutations of S_n and explicit character models. n <= 6.
BigInt brute_force_Fpi(const RepSpec& rep, const Poly& f, Budget budget = Budget::standard());

enum class BettiKind { kInduced, kRegular };

/// 3 (k+2)^{n+m} for induced representations, 3 (n+2)^{n+m} otherwise.
BigInt betti_bound(BettiKind kind, int n, int m, int k = 0);

}  // namespace ffsi

#endif  // FFSI_SYMMETRIC_HPP
