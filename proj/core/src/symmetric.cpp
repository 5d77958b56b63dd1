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

#include "ffsi/symmetric.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <numeric>

namespace ffsi {
namespace {

template <typename... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

void partitions_into(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back({prefix});
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_into(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

void require_degree(const RepSpec& rep, const CycleType& tau) {
  if (rep_n(rep) != tau.size()) {
    throw DomainError("cycle type " + tau.to_string() + " is not a partition of " + std::to_string(rep_n(rep)));
  }
}

std::vector<std::int64_t> exterior_perm_coefficients(const CycleType& tau, int n) {
  // prod over cycles of (1 - (-t)^l).
  std::vector<std::int64_t> c(static_cast<std::size_t>(n) + 1, 0);
  c[0] = 1;
  int deg = 0;
  for (int l : tau.parts) {
    const std::int64_t coef = (l % 2 == 0) ? -1 : 1;
    for (int j = deg; j >= 0; --j) c[static_cast<std::size_t>(j + l)] += coef * c[static_cast<std::size_t>(j)];
    deg += l;
  }
  return c;
}

std::int64_t block_assignments(const std::vector<int>& cycles, std::size_t idx, std::vector<int>& capacity) {
  if (idx == cycles.size()) return 1;
  std::int64_t total = 0;
  for (auto& cap : capacity) {
    if (cap < cycles[idx]) continue;
    cap -= cycles[idx];
    total += block_assignments(cycles, idx + 1, capacity);
    cap += cycles[idx];
  }
  return total;
}

std::int64_t young_character(const std::vector<int>& blocks, const CycleType& tau) {
  std::vector<int> capacity = blocks;
  return block_assignments(tau.parts, 0, capacity);
}

// Murnaghan-Nakayama on beta-sets.
std::int64_t murnaghan_nakayama(const std::vector<int>& lambda, const std::vector<int>& tau) {
  static std::mutex mutex;
  static std::map<std::pair<std::vector<int>, std::vector<int>>, std::int64_t> memo;
  if (tau.empty()) return lambda.empty() ? 1 : 0;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find({lambda, tau}); it != memo.end()) return it->second;
  }
  const int k = tau.front();
  const std::vector<int> rest(tau.begin() + 1, tau.end());
  const int len = static_cast<int>(lambda.size());
  std::vector<int> beta(lambda.size());
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (len - 1 - i);

  std::int64_t total = 0;
  for (int i = 0; i < len; ++i) {
    const int b = beta[static_cast<std::size_t>(i)] - k;
    if (b < 0 || std::find(beta.begin(), beta.end(), b) != beta.end()) continue;
    int between = 0;
    for (int x : beta)
      if (x > b && x < beta[static_cast<std::size_t>(i)]) ++between;
    std::vector<int> next = beta;
    next[static_cast<std::size_t>(i)] = b;
    std::sort(next.rbegin(), next.rend());
    std::vector<int> mu;
    for (int j = 0; j < len; ++j) {
      const int part = next[static_cast<std::size_t>(j)] - (len - 1 - j);
      if (part > 0) mu.push_back(part);
    }
    total += (between % 2 == 0 ? 1 : -1) * murnaghan_nakayama(mu, rest);
  }
  std::lock_guard lock(mutex);
  memo.emplace(std::pair{lambda, tau}, total);
  return total;
}

std::vector<int> parse_ints(std::string_view text) {
  std::vector<int> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view piece = text.substr(0, comma);
    int value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (ec != std::errc() || ptr != piece.data() + piece.size()) {
      throw DomainError("expected an integer list, got '" + std::string(text) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

void fixed_tuples(const std::vector<int>& cycles, std::size_t idx, const FactorizationType& type,
                  std::vector<int>& remaining, BigInt weight, BigInt& total) {
  if (idx == cycles.size()) {
    total += weight;
    return;
  }
  const int l = cycles[idx];
  for (std::size_t j = 0; j < type.parts.size(); ++j) {
    const int d = type.parts[j].first;
    if (l % d != 0 || remaining[j] < l / d) continue;
    remaining[j] -= l / d;
    fixed_tuples(cycles, idx + 1, type, remaining, weight * d, total);
    remaining[j] += l / d;
  }
}

}  // namespace

int Partition::size() const noexcept { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::to_string() const { return "[" + join_ints(parts) + "]"; }

Partition make_partition(std::vector<int> parts) {
  for (int x : parts)
    if (x < 0) throw DomainError("partition parts must be nonnegative");
  std::erase(parts, 0);
  std::sort(parts.rbegin(), parts.rend());
  return {std::move(parts)};
}

const std::vector<Partition>& partitions(int n) {
  if (n < 0) throw DomainError("partitions of a negative integer");
  static std::mutex mutex;
  static std::map<int, std::vector<Partition>> cache;
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace(n);
  if (inserted) {
    std::vector<int> prefix;
    partitions_into(n, n, prefix, it->second);
  }
  return it->second;
}

BigInt centralizer_order(const CycleType& tau) {
  std::map<int, unsigned> mult;
  for (int l : tau.parts) ++mult[l];
  BigInt z = 1;
  for (auto [l, k] : mult) z *= big_pow(static_cast<std::uint64_t>(l), k) * factorial(k);
  return z;
}

BigInt class_size(const CycleType& tau) {
  return exact_div(factorial(static_cast<unsigned>(tau.size())), centralizer_order(tau), "class size");
}

void validate(const RepSpec& rep) {
  std::visit(Overloaded{
                 [](const SignRep& r) {
                   if (r.n < 1) throw DomainError("sign representation needs n >= 1");
                 },
                 [](const ExtStdRep& r) {
                   if (r.n < 1 || r.i < 0 || r.i > r.n - 1) {
                     throw DomainError("exterior power index " + std::to_string(r.i) + " outside [0, n-1]");
                   }
                 },
                 [](const YoungInducedRep& r) {
                   int n = 0;
                   for (int b : r.blocks) {
                     if (b < 0) throw DomainError("Young block sizes must be nonnegative");
                     n += b;
                   }
                   if (r.blocks.empty() || n < 1) throw DomainError("Young blocks must sum to n >= 1");
                 },
                 [](const IrreducibleRep& r) {
                   if (r.shape.parts.empty() || make_partition(r.shape.parts) != r.shape) {
                     throw DomainError("irreducible shape must be a partition in descending order");
                   }
                 },
             },
             rep);
}

int rep_n(const RepSpec& rep) {
  return std::visit(Overloaded{
                        [](const SignRep& r) { return r.n; },
                        [](const ExtStdRep& r) { return r.n; },
                        [](const YoungInducedRep& r) { return std::accumulate(r.blocks.begin(), r.blocks.end(), 0); },
                        [](const IrreducibleRep& r) { return r.shape.size(); },
                    },
                    rep);
}

RepSpec trivial_rep(int n) { return YoungInducedRep{{n}}; }

std::string to_string(const RepSpec& rep) {
  return std::visit(Overloaded{
                        [](const SignRep&) { return std::string("sign"); },
                        [](const ExtStdRep& r) { return "extstd:" + std::to_string(r.i); },
                        [](const YoungInducedRep& r) {
                          return r.blocks.size() == 1 ? std::string("triv") : "young:" + join_ints(r.blocks);
                        },
                        [](const IrreducibleRep& r) { return "irr:" + join_ints(r.shape.parts); },
                    },
                    rep);
}

RepSpec parse_rep(std::string_view text, int n) {
  RepSpec rep;
  const auto colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  const std::string_view args = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  if (head == "sign" && args.empty()) {
    rep = SignRep{n};
  } else if (head == "triv" && args.empty()) {
    rep = trivial_rep(n);
  } else if (head == "extstd") {
    const auto v = parse_ints(args);
    if (v.size() != 1) throw DomainError("extstd takes one index");
    rep = ExtStdRep{n, v[0]};
  } else if (head == "young") {
    rep = YoungInducedRep{parse_ints(args)};
  } else if (head == "irr") {
    rep = IrreducibleRep{Partition{parse_ints(args)}};
  } else {
    throw DomainError("unknown representation '" + std::string(text) + "'");
  }
  validate(rep);
  if (rep_n(rep) != n) throw DomainError("representation '" + std::string(text) + "' is not on S_" + std::to_string(n));
  return rep;
}

int VirtualRep::n() const {
  if (terms.empty()) throw DomainError("empty virtual representation");
  const int n = rep_n(terms.front().second);
  for (const auto& [c, r] : terms)
    if (rep_n(r) != n) throw DomainError("virtual representation mixes different S_n");
  return n;
}

std::string VirtualRep::to_string() const {
  std::string out;
  for (const auto& [c, r] : terms) {
    if (!out.empty()) out += " ";
    out += (c < 0 ? "-" : "+") + std::to_string(c < 0 ? -c : c) + "*" + ffsi::to_string(r);
  }
  return out;
}

VirtualRep alternating_exterior_sum(int n) {
  VirtualRep v;
  for (int i = 0; i < n; ++i) v.terms.emplace_back(i % 2 == 0 ? 1 : -1, ExtStdRep{n, i});
  return v;
}

std::int64_t character_value(const RepSpec& rep, const CycleType& tau) {
  validate(rep);
  require_degree(rep, tau);
  const int n = tau.size();
  return std::visit(Overloaded{
                        [&](const SignRep&) -> std::int64_t {
                          return (n - static_cast<int>(tau.parts.size())) % 2 == 0 ? 1 : -1;
                        },
                        [&](const ExtStdRep& r) -> std::int64_t {
                          const auto perm = exterior_perm_coefficients(tau, n);
                          std::int64_t std_value = 0;
                          for (int j = 0; j <= r.i; ++j) std_value = perm[static_cast<std::size_t>(j)] - std_value;
                          return std_value;
                        },
                        [&](const YoungInducedRep& r) -> std::int64_t { return young_character(r.blocks, tau); },
                        [&](const IrreducibleRep& r) -> std::int64_t {
                          return murnaghan_nakayama(r.shape.parts, tau.parts);
                        },
                    },
                    rep);
}

std::int64_t character_value(const VirtualRep& rep, const CycleType& tau) {
  std::int64_t total = 0;
  for (const auto& [c, r] : rep.terms) total += c * character_value(r, tau);
  return total;
}

std::int64_t invariant_dimension(const RepSpec& rep) {
  const int n = rep_n(rep);
  BigInt total = 0;
  for (const auto& tau : partitions(n)) total += class_size(tau) * character_value(rep, tau);
  return to_int64(exact_div(total, factorial(static_cast<unsigned>(n)), "invariant dimension"));
}

std::int64_t invariant_dimension(const VirtualRep& rep) {
  std::int64_t total = 0;
  for (const auto& [c, r] : rep.terms) total += c * invariant_dimension(r);
  return total;
}

CycleType cycle_type_of_frobenius(const Poly& f) {
  const Factorization fz = factor(f);
  std::vector<int> parts;
  for (const auto& fac : fz.factors) {
    if (fac.multiplicity != 1) throw DomainError("cycle type of Frobenius needs a squarefree polynomial");
    parts.push_back(fac.prime.degree());
  }
  return make_partition(std::move(parts));
}

BigInt fixed_tuple_count(const CycleType& tau, const FactorizationType& type) {
  if (tau.size() != type.degree()) throw DomainError("cycle type and polynomial degree differ");
  std::vector<int> remaining;
  for (auto [d, e] : type.parts) remaining.push_back(e);
  BigInt total = 0;
  fixed_tuples(tau.parts, 0, type, remaining, BigInt(1), total);
  return total;
}

BigInt fixed_tuple_count(const CycleType& tau, const Factorization& fact) { return fixed_tuple_count(tau, fact.type()); }

BigInt factorization_function(const RepSpec& rep, const FactorizationType& type) {
  return factorization_function(VirtualRep{{{1, rep}}}, type);
}

BigInt factorization_function(const VirtualRep& rep, const FactorizationType& type) {
  const int n = rep.n();
  if (type.degree() != n) {
    throw DomainError("F_pi for S_" + std::to_string(n) + " evaluated on degree " + std::to_string(type.degree()));
  }
  BigInt total = 0;
  for (const auto& tau : partitions(n)) {
    const std::int64_t chi = character_value(rep, tau);
    if (chi == 0) continue;
    total += class_size(tau) * chi * fixed_tuple_count(tau, type);
  }
  return exact_div(total, factorial(static_cast<unsigned>(n)), "factorization function average");
}

BigInt factorization_function(const RepSpec& rep, const Poly& f) { return factorization_function(rep, factor(f).type()); }

BigInt factorization_function(const VirtualRep& rep, const Poly& f) {
  return factorization_function(rep, factor(f).type());
}

BigInt betti_bound(BettiKind kind, int n, int m, int k) {
  if (m < 0 || n < m) throw DomainError("betti bound needs n >= m >= 0");
  if (kind == BettiKind::kInduced && k < 1) throw DomainError("betti bound for induced representations needs k >= 1");
  const int base = kind == BettiKind::kInduced ? k + 2 : n + 2;
  return 3 * big_pow(static_cast<std::uint64_t>(base), static_cast<unsigned>(n + m));
}

}  // namespace ffsi
