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

#include "ffsi/enumerate.hpp"

#include <algorithm>

namespace ffsi {

void ShortIntervalSpec::validate() const {
  if (m < 0 || n < 0) throw DomainError("interval degrees must be nonnegative");
  if (m > n) throw DomainError("interval pins m = " + std::to_string(m) + " > n = " + std::to_string(n));
  if (c.size() != static_cast<std::size_t>(m)) throw DomainError("interval needs exactly m pinned coefficients");
  for (auto x : c)
    if (x.value >= field.q()) throw DomainError("pinned coefficient outside the field");
}

std::uint64_t ShortIntervalSpec::size() const noexcept { return checked_pow(field.q(), static_cast<unsigned>(n - m)); }

std::uint64_t ShortIntervalSpec::first_index() const noexcept {
  return interval_index(field, c) * checked_pow(field.q(), static_cast<unsigned>(n - m));
}

std::string ShortIntervalSpec::to_string() const {
  std::string out = "I(q=" + std::to_string(field.q()) + ",n=" + std::to_string(n) + ",m=" + std::to_string(m) + ",c=[";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ";";
    out += field.to_string(c[i]);
  }
  return out + "])";
}

std::uint64_t interval_index(const FieldSpec& field, const std::vector<FieldElement>& c) {
  std::uint64_t idx = 0;
  for (auto x : c) idx = idx * field.q() + x.value;
  return idx;
}

std::vector<FieldElement> interval_coefficients(const FieldSpec& field, int m, std::uint64_t index) {
  std::vector<FieldElement> c(static_cast<std::size_t>(m));
  for (int i = m; i-- > 0;) {
    c[static_cast<std::size_t>(i)] = FieldElement{static_cast<std::uint32_t>(index % field.q())};
    index /= field.q();
  }
  return c;
}

MonicRange::MonicRange(FieldSpec field, int n, std::uint64_t first, std::uint64_t count)
    : field_(std::move(field)), n_(n), first_(first), count_(count) {
  if (n < 0) throw DomainError("negative degree");
  const std::uint64_t total = checked_pow(field_.q(), static_cast<unsigned>(n));
  if (first > total || count > total - first) throw DomainError("monic range outside the degree slice");
}

MonicRange MonicRange::all(const FieldSpec& field, int n, Budget budget) {
  if (n < 0) throw DomainError("negative degree");
  const std::uint64_t total = checked_pow(field.q(), static_cast<unsigned>(n));
  budget.require(total, "monic polynomials of degree " + std::to_string(n));
  return MonicRange(field, n, 0, total);
}

MonicRange MonicRange::interval(const ShortIntervalSpec& spec, Budget budget) {
  spec.validate();
  budget.require(spec.size(), "interval " + spec.to_string());
  return MonicRange(spec.field, spec.n, spec.first_index(), spec.size());
}

Poly MonicRange::at(std::uint64_t i) const { return monic_at(field_, n_, first_ + i); }

MonicRange MonicRange::slice(std::uint64_t begin, std::uint64_t end) const {
  end = std::min(end, count_);
  begin = std::min(begin, end);
  return MonicRange(field_, n_, first_ + begin, end - begin);
}

std::vector<MonicRange> MonicRange::chunks(std::uint64_t parts) const {
  std::vector<MonicRange> out;
  parts = std::max<std::uint64_t>(1, std::min(parts, count_));
  for (std::uint64_t k = 0; k < parts; ++k) {
    const std::uint64_t b = count_ * k / parts;
    const std::uint64_t e = count_ * (k + 1) / parts;
    if (e > b) out.push_back(slice(b, e));
  }
  return out;
}

Poly monic_at(const FieldSpec& field, int n, std::uint64_t index) {
  std::vector<FieldElement> c(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j < n; ++j) {
    c[static_cast<std::size_t>(j)] = FieldElement{static_cast<std::uint32_t>(index % field.q())};
    index /= field.q();
  }
  c.back() = field.one();
  return Poly(field, std::move(c));
}

std::uint64_t monic_index(const Poly& f) {
  if (!f.is_monic()) throw DomainError("monic_index: polynomial is not monic");
  std::uint64_t idx = 0;
  for (int j = f.degree() - 1; j >= 0; --j) idx = idx * f.field().q() + f.coeff(j).value;
  return idx;
}

std::vector<Poly> enumerate_monic(const FieldSpec& field, int n, Budget budget) {
  const MonicRange r = MonicRange::all(field, n, budget);
  std::vector<Poly> out;
  out.reserve(r.size());
  for (std::uint64_t i = 0; i < r.size(); ++i) out.push_back(r.at(i));
  return out;
}

std::vector<Poly> enumerate_interval(const ShortIntervalSpec& spec, Budget budget) {
  const MonicRange r = MonicRange::interval(spec, budget);
  std::vector<Poly> out;
  out.reserve(r.size());
  for (std::uint64_t i = 0; i < r.size(); ++i) out.push_back(r.at(i));
  return out;
}

}  // namespace ffsi
