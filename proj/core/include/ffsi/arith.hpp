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

#ifndef FFSI_ARITH_HPP
#define FFSI_ARITH_HPP

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ffsi/factor.hpp"
#include "ffsi/numeric.hpp"
#include "ffsi/symmetric.hpp"

namespace ffsi {

struct DivisorK {
  int k = 1;
};

/// d_k^{(n_1,...,n_k)}: ordered factorizations into monics of the given degrees.
struct DivisorRestricted {
  std::vector<int> parts;
};

struct Mobius {};
struct VonMangoldt {};

struct Fpi {
  VirtualRep rep;
};

using ArithFnSpec = std::variant<DivisorK, DivisorRestricted, Mobius, VonMangoldt, Fpi>;

/// Parses dk:K, dkr:n1,..,nk, mobius, lambda or fpi:<rep> (see parse_rep);
/// n is the working degree.
ArithFnSpec parse_arith_fn(std::string_view text, int n);
std::string to_string(const ArithFnSpec& fn);

/// Throws DomainError when fn cannot be evaluated in degree n.
void validate(const ArithFnSpec& fn, int n);

BigInt divisor_k(const FactorizationType& type, int k);
BigInt divisor_k(const Poly& f, int k);

BigInt divisor_restricted(const FactorizationType& type, const std::vector<int>& parts);
BigInt divisor_restricted(const Poly& f, const std::vector<int>& parts);

int mobius(const FactorizationType& type);
int mobius(const Poly& f);

int mangoldt(const FactorizationType& type);
int mangoldt(const Poly& f);

BigInt evaluate(const ArithFnSpec& fn, const FactorizationType& type);
BigInt evaluate(const ArithFnSpec& fn, const Poly& f);

/// Compositions of n into k parts, nonnegative or strictly positive, in
/// lexicographic order.
std::vector<std::vector<int>> compositions(int n, int k, bool allow_zero);

}  // namespace ffsi

#endif  // FFSI_ARITH_HPP
