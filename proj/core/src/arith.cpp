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

#include "ffsi/arith.hpp"

#include <charconv>
#include <numeric>

namespace ffsi {
namespace {

std::vector<int> parse_list(std::string_view text) {
  std::vector<int> out;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view piece = text.substr(0, comma);
    int value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size()) {
      throw DomainError("malformed integer list '" + std::string(text) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) return out;
    text.remove_prefix(comma + 1);
  }
}

// Distributes the exponent of factor j over the k slots, slot i having
// remaining degree budget[i].
void distribute(const FactorizationType& type, std::size_t j, int left, std::size_t slot,
                std::vector<int>& budget, BigInt& count) {
  if (j == type.parts.size()) {
    if (std::all_of(budget.begin(), budget.end(), [](int b) { return b == 0; })) ++count;
    return;
  }
  const auto [d, e] = type.parts[j];
  if (slot + 1 == budget.size()) {
    if (budget[slot] < d * left) return;
    budget[slot] -= d * left;
    distribute(type, j + 1, j + 1 < type.parts.size() ? type.parts[j + 1].second : 0, 0, budget, count);
    budget[slot] += d * left;
    return;
  }
  for (int a = 0; a <= left && d * a <= budget[slot]; ++a) {
    budget[slot] -= d * a;
    distribute(type, j, left - a, slot + 1, budget, count);
    budget[slot] += d * a;
  }
}

void compose_into(int n, int k, bool allow_zero, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (k == 0) {
    if (n == 0) out.push_back(prefix);
    return;
  }
  const int lo = allow_zero ? 0 : 1;
  for (int x = lo; x <= n; ++x) {
    prefix.push_back(x);
    compose_into(n - x, k - 1, allow_zero, prefix, out);
    prefix.pop_back();
  }
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

}  // namespace

ArithFnSpec parse_arith_fn(std::string_view text, int n) {
  const auto colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  const std::string_view args = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  ArithFnSpec fn;
  if (head == "dk") {
    const auto v = parse_list(args);
    if (v.size() != 1) throw DomainError("dk takes a single k");
    fn = DivisorK{v[0]};
  } else if (head == "dkr") {
    fn = DivisorRestricted{parse_list(args)};
  } else if (head == "mobius" && args.empty()) {
    fn = Mobius{};
  } else if (head == "lambda" && args.empty()) {
    fn = VonMangoldt{};
  } else if (head == "fpi") {
    fn = Fpi{VirtualRep{{{1, parse_rep(args, n)}}}};
  } else {
    throw DomainError("unknown function '" + std::string(text) + "'");
  }
  validate(fn, n);
  return fn;
}

std::string to_string(const ArithFnSpec& fn) {
  if (const auto* d = std::get_if<DivisorK>(&fn)) return "dk:" + std::to_string(d->k);
  if (const auto* d = std::get_if<DivisorRestricted>(&fn)) return "dkr:" + join(d->parts);
  if (std::holds_alternative<Mobius>(fn)) return "mobius";
  if (std::holds_alternative<VonMangoldt>(fn)) return "lambda";
  const auto& rep = std::get<Fpi>(fn).rep;
  if (rep.terms.size() == 1 && rep.terms[0].first == 1) return "fpi:" + to_string(rep.terms[0].second);
  return "fpi:{" + rep.to_string() + "}";
}

void validate(const ArithFnSpec& fn, int n) {
  if (n < 0) throw DomainError("negative degree");
  if (const auto* d = std::get_if<DivisorK>(&fn)) {
    if (d->k < 1) throw DomainError("divisor function needs k >= 1");
  } else if (const auto* d = std::get_if<DivisorRestricted>(&fn)) {
    if (d->parts.empty()) throw DomainError("restricted divisor function needs at least one part");
    for (int x : d->parts)
      if (x < 0) throw DomainError("restricted divisor degrees must be nonnegative");
    if (std::accumulate(d->parts.begin(), d->parts.end(), 0) != n) {
      throw DomainError("restricted divisor degrees " + join(d->parts) + " do not sum to " + std::to_string(n));
    }
  } else if (std::holds_alternative<VonMangoldt>(fn)) {
    if (n < 1) throw DomainError("von Mangoldt function needs degree >= 1");
  } else if (const auto* f = std::get_if<Fpi>(&fn)) {
    for (const auto& [c, r] : f->rep.terms) validate(r);
    if (f->rep.n() != n) throw DomainError("representation is not on S_" + std::to_string(n));
  }
}

BigInt divisor_k(const FactorizationType& type, int k) {
  if (k < 1) throw DomainError("divisor function needs k >= 1");
  BigInt r = 1;
  for (auto [d, e] : type.parts) r *= binomial(static_cast<unsigned>(e + k - 1), static_cast<unsigned>(k - 1));
  return r;
}

BigInt divisor_k(const Poly& f, int k) {
  if (!f.is_monic()) throw DomainError("divisor function needs a monic polynomial");
  return f.degree() == 0 ? BigInt(1) : divisor_k(factor(f).type(), k);
}

BigInt divisor_restricted(const FactorizationType& type, const std::vector<int>& parts) {
  validate(DivisorRestricted{parts}, type.degree());
  std::vector<int> budget = parts;
  BigInt count = 0;
  distribute(type, 0, type.parts.empty() ? 0 : type.parts[0].second, 0, budget, count);
  return count;
}

BigInt divisor_restricted(const Poly& f, const std::vector<int>& parts) {
  if (!f.is_monic()) throw DomainError("divisor function needs a monic polynomial");
  return divisor_restricted(f.degree() == 0 ? FactorizationType{} : factor(f).type(), parts);
}

int mobius(const FactorizationType& type) {
  if (!type.is_squarefree()) return 0;
  return type.parts.size() % 2 == 0 ? 1 : -1;
}

int mobius(const Poly& f) {
  if (!f.is_monic()) throw DomainError("Mobius function needs a monic polynomial");
  return f.degree() == 0 ? 1 : mobius(factor(f).type());
}

int mangoldt(const FactorizationType& type) {
  if (type.degree() < 1) throw DomainError("von Mangoldt function needs degree >= 1");
  return type.parts.size() == 1 ? type.parts[0].first : 0;
}

int mangoldt(const Poly& f) {
  if (!f.is_monic() || f.degree() < 1) throw DomainError("von Mangoldt function needs a monic nonconstant polynomial");
  return mangoldt(factor(f).type());
}

BigInt evaluate(const ArithFnSpec& fn, const FactorizationType& type) {
  if (const auto* d = std::get_if<DivisorK>(&fn)) return divisor_k(type, d->k);
  if (const auto* d = std::get_if<DivisorRestricted>(&fn)) return divisor_restricted(type, d->parts);
  if (std::holds_alternative<Mobius>(fn)) return mobius(type);
  if (std::holds_alternative<VonMangoldt>(fn)) return mangoldt(type);
  return factorization_function(std::get<Fpi>(fn).rep, type);
}

BigInt evaluate(const ArithFnSpec& fn, const Poly& f) {
  if (!f.is_monic()) throw DomainError("arithmetic functions take monic polynomials");
  validate(fn, f.degree());
  return evaluate(fn, f.degree() == 0 ? FactorizationType{} : factor(f).type());
}

std::vector<std::vector<int>> compositions(int n, int k, bool allow_zero) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  compose_into(n, k, allow_zero, prefix, out);
  return out;
}

}  // namespace ffsi
