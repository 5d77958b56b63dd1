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

#ifndef FFSI_FACTOR_HPP
#define FFSI_FACTOR_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ffsi/budget.hpp"
#include "ffsi/poly.hpp"

namespace ffsi {

/// Multiset of (degree, multiplicity) pairs of the irreducible factors of a
/// monic polynomial, kept sorted ascending. Every factorization function is
/// a function of this data alone.
struct FactorizationType {
  std::vector<std::pair<int, int>> parts;

  int degree() const noexcept;
  bool is_squarefree() const noexcept;
  std::string to_string() const;

  friend auto operator<=>(const FactorizationType&, const FactorizationType&) = default;
};

struct Factor {
  Poly prime;
  int multiplicity = 1;
};

/// Irreducible factorization of a monic polynomial. Factors are pairwise
/// distinct, monic, and sorted by (degree, coefficients from the top).
struct Factorization {
  std::vector<Factor> factors;

  Poly product(const FieldSpec& field) const;
  FactorizationType type() const;
};

/// Squarefree decomposition, distinct-degree and equal-degree splitting.
/// Splitting draws from a generator seeded with a fixed constant at every
/// call, so results never depend on call order. Throws DomainError for a
/// non-monic or constant input.
Factorization factor(const Poly& f);

/// True iff f (monic, degree >= 1) is irreducible.
bool is_irreducible(const Poly& f);

/// Factorization types of every monic polynomial of degree n over a field,
/// indexed by the enumeration index of MonicRange. Built by multiplying out
/// irreducibles in canonical order, so no polynomial is factored.
class FactorTypeTable {
 public:
  static FactorTypeTable build(const FieldSpec& field, int n, Budget budget = Budget::standard());

  const FieldSpec& field() const noexcept { return field_; }
  int degree() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return ids_.size(); }

  std::uint32_t type_id(std::uint64_t index) const { return ids_.at(index); }
  const std::vector<std::uint32_t>& type_ids() const noexcept { return ids_; }
  const std::vector<FactorizationType>& types() const noexcept { return types_; }

 private:
  FactorTypeTable(FieldSpec field, int n) : field_(std::move(field)), n_(n) {}

  FieldSpec field_;
  int n_;
  std::vector<std::uint32_t> ids_;
  std::vector<FactorizationType> types_;
};

}  // namespace ffsi

#endif  // FFSI_FACTOR_HPP
