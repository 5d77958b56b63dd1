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

#include "ffsi/variety.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include "ffsi/parallel.hpp"

namespace ffsi {
namespace {

using Series = std::vector<FieldElement>;  // truncated power series in u

// Target series 1 + c_1 u + ... + c_m u^m over the extension.
Series target_series(const ShortIntervalSpec& spec, const FieldSpec& K) {
  const FieldEmbedding phi(spec.field, K);
  Series t(static_cast<std::size_t>(spec.m) + 1, K.zero());
  t[0] = K.one();
  for (int j = 1; j <= spec.m; ++j) t[static_cast<std::size_t>(j)] = phi(spec.c[static_cast<std::size_t>(j - 1)]);
  return t;
}

struct XCounter {
  const FieldSpec& K;
  int n;
  int m;
  std::vector<Series> levels;  // levels[i]: target / prod_{j<i} (1 - u a_j)
  BigInt count = 0;

  void step(int depth, FieldElement a) {
    const Series& w = levels[static_cast<std::size_t>(depth)];
    Series& next = levels[static_cast<std::size_t>(depth) + 1];
    next[0] = w[0];
    for (int j = 1; j <= m; ++j) {
      next[static_cast<std::size_t>(j)] = K.add(w[static_cast<std::size_t>(j)], K.mul(a, next[static_cast<std::size_t>(j - 1)]));
    }
  }

  void run(int depth) {
    const Series& w = levels[static_cast<std::size_t>(depth)];
    const int remaining = n - depth;
    // A product of `remaining` linear factors has degree <= remaining.
    for (int j = remaining + 1; j <= m; ++j)
      if (w[static_cast<std::size_t>(j)].value != 0) return;
    if (remaining == 0) {
      ++count;
      return;
    }
    if (remaining == 1) {
      // 1 - u a = w forces a = -w_1; the higher coefficients were checked.
      ++count;
      return;
    }
    for (std::uint32_t x = 0; x < K.q(); ++x) {
      step(depth, FieldElement{x});
      run(depth + 1);
    }
  }
};

// prod (1 + h_{i,1} u + ... ) over the chosen heads, truncated at u^m.
struct QuotientCounter {
  const FieldSpec& K;
  int m;
  std::vector<int> head_sizes;
  Series target;
  std::vector<Series> levels;
  std::uint64_t matches = 0;

  void run(std::size_t idx) {
    const Series& cur = levels[idx];
    const int h = head_sizes[idx];
    if (idx + 1 == head_sizes.size()) {
      // The last head is target / cur; it exists when that quotient has no
      // terms beyond degree h.
      Series quo(cur.size(), K.zero());
      for (int j = 0; j <= m; ++j) {
        FieldElement v = target[static_cast<std::size_t>(j)];
        for (int i = 1; i <= j; ++i) {
          v = K.sub(v, K.mul(cur[static_cast<std::size_t>(i)], quo[static_cast<std::size_t>(j - i)]));
        }
        quo[static_cast<std::size_t>(j)] = v;
        if (j > h && v.value != 0) return;
      }
      ++matches;
      return;
    }
    const std::uint64_t choices = checked_pow(K.q(), static_cast<unsigned>(h));
    Series head(static_cast<std::size_t>(h) + 1, K.zero());
    head[0] = K.one();
    Series& next = levels[idx + 1];
    for (std::uint64_t code = 0; code < choices; ++code) {
      std::uint64_t rest = code;
      for (int j = 1; j <= h; ++j) {
        head[static_cast<std::size_t>(j)] = FieldElement{static_cast<std::uint32_t>(rest % K.q())};
        rest /= K.q();
      }
      std::fill(next.begin(), next.end(), K.zero());
      for (int a = 0; a <= m; ++a) {
        if (cur[static_cast<std::size_t>(a)].value == 0) continue;
        for (int b = 0; b <= h && a + b <= m; ++b) {
          next[static_cast<std::size_t>(a + b)] =
              K.add(next[static_cast<std::size_t>(a + b)], K.mul(cur[static_cast<std::size_t>(a)], head[static_cast<std::size_t>(b)]));
        }
      }
      run(idx + 1);
    }
  }
};

struct ConeCounter {
  const FieldSpec& K;
  int n;
  int m;
  std::vector<FieldElement> values;
  std::vector<int> mult;
  BigInt count = 0;

  bool trivial_product() const {
    Series prod(static_cast<std::size_t>(m) + 1, K.zero());
    prod[0] = K.one();
    for (std::size_t i = 0; i < values.size(); ++i) {
      for (int t = 0; t < mult[i]; ++t) {
        for (int j = m; j >= 1; --j) {
          prod[static_cast<std::size_t>(j)] =
              K.sub(prod[static_cast<std::size_t>(j)], K.mul(values[i], prod[static_cast<std::size_t>(j - 1)]));
        }
      }
    }
    for (int j = 1; j <= m; ++j)
      if (prod[static_cast<std::size_t>(j)].value != 0) return false;
    return true;
  }

  void multiplicities(std::size_t idx, int left) {
    if (idx + 1 == values.size()) {
      mult[idx] = left;
      if (trivial_product()) {
        BigInt arrangements = factorial(static_cast<unsigned>(n));
        for (int k : mult) arrangements /= factorial(static_cast<unsigned>(k));
        count += arrangements;
      }
      return;
    }
    for (int k = 1; k <= left - static_cast<int>(values.size() - idx - 1); ++k) {
      mult[idx] = k;
      multiplicities(idx + 1, left - k);
    }
  }

  void subsets(std::uint32_t start, int size) {
    if (static_cast<int>(values.size()) == size) {
      mult.assign(values.size(), 0);
      multiplicities(0, n);
      return;
    }
    for (std::uint32_t x = start; x < K.q(); ++x) {
      values.push_back({x});
      subsets(x + 1, size);
      values.pop_back();
    }
  }
};

}  // namespace

FieldSpec extension_field(const FieldSpec& base, int r, Budget budget) {
  if (r < 1) throw DomainError("extension degree must be at least 1");
  return FieldSpec::make(base.p(), base.e() * static_cast<std::uint32_t>(r), budget);
}

bool lies_on_X(const ShortIntervalSpec& spec, const FieldSpec& field, const std::vector<FieldElement>& a) {
  spec.validate();
  if (static_cast<int>(a.size()) != spec.n) throw DomainError("tuple length must equal n");
  const Series target = target_series(spec, field);
  Series prod(static_cast<std::size_t>(spec.m) + 1, field.zero());
  prod[0] = field.one();
  for (auto x : a) {
    for (int j = spec.m; j >= 1; --j) {
      prod[static_cast<std::size_t>(j)] = field.sub(prod[static_cast<std::size_t>(j)], field.mul(x, prod[static_cast<std::size_t>(j - 1)]));
    }
  }
  return prod == target;
}

BigInt count_points_X(const ShortIntervalSpec& spec, int r, Budget budget) {
  spec.validate();
  const FieldSpec K = extension_field(spec.field, r, budget);
  const int n = spec.n;
  const int m = spec.m;
  if (m == 0) return big_pow(K.q(), static_cast<unsigned>(n));
  budget.require(checked_pow(K.q(), static_cast<unsigned>(std::max(0, std::min(n - 1, n - m + 1)))),
                 "point count of X over F_" + std::to_string(K.q()));
  const Series target = target_series(spec, K);
  const auto make_counter = [&] {
    XCounter c{K, n, m, std::vector<Series>(static_cast<std::size_t>(n) + 1, Series(static_cast<std::size_t>(m) + 1)), 0};
    c.levels[0] = target;
    return c;
  };
  if (n < 2) {
    XCounter counter = make_counter();
    counter.run(0);
    return counter.count;
  }
  // Blocks of the first coordinate run independently and are summed.
  const unsigned threads = K.q() >= 8 ? default_threads() : 1;
  std::vector<BigInt> partial(K.q());
  parallel_blocks(K.q(), threads, [&](std::uint64_t begin, std::uint64_t end) {
    XCounter counter = make_counter();
    for (std::uint64_t x = begin; x < end; ++x) {
      counter.step(0, FieldElement{static_cast<std::uint32_t>(x)});
      counter.run(1);
    }
    partial[static_cast<std::size_t>(begin)] = counter.count;
  });
  return std::accumulate(partial.begin(), partial.end(), BigInt(0));
}

BigInt count_points_quotient(const ShortIntervalSpec& spec, const std::vector<int>& blocks, int r, Budget budget) {
  spec.validate();
  if (blocks.empty() || std::accumulate(blocks.begin(), blocks.end(), 0) != spec.n) {
    throw DomainError("quotient blocks must sum to n");
  }
  for (int b : blocks)
    if (b < 0) throw DomainError("quotient blocks must be nonnegative");
  const FieldSpec K = extension_field(spec.field, r, budget);
  std::vector<int> heads;
  int head_total = 0;
  int free_total = 0;
  for (int b : blocks) {
    heads.push_back(std::min(b, spec.m));
    head_total += heads.back();
    free_total += b - heads.back();
  }
  budget.require(checked_pow(K.q(), static_cast<unsigned>(head_total - heads.back())), "quotient point count");
  QuotientCounter counter{K, spec.m, heads, target_series(spec, K),
                          std::vector<Series>(heads.size() + 1, Series(static_cast<std::size_t>(spec.m) + 1, K.zero())), 0};
  counter.levels[0][0] = K.one();
  counter.run(0);
  return BigInt(counter.matches) * big_pow(K.q(), static_cast<unsigned>(free_total));
}

BigInt count_R_cone(const FieldSpec& field, int n, int m, int r, Budget budget) {
  if (m < 1 || n < m) throw DomainError("R cone needs n >= m >= 1");
  const FieldSpec K = extension_field(field, r, budget);
  std::uint64_t work = 0;
  for (int s = 1; s <= m - 1; ++s) {
    const std::uint64_t subsets = binomial(K.q(), static_cast<unsigned>(s)).convert_to<std::uint64_t>();
    work += subsets * binomial(static_cast<unsigned>(n - 1), static_cast<unsigned>(s - 1)).convert_to<std::uint64_t>();
  }
  budget.require(work, "R cone point count");
  ConeCounter counter{K, n, m, {}, {}, 0};
  for (int s = 1; s <= std::min(m - 1, n); ++s) counter.subsets(0, s);
  return counter.count;
}

double dimension_fit(const std::vector<std::pair<int, BigInt>>& counts, std::uint64_t q) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& [r, c] : counts) {
    if (c > 0) pts.emplace_back(r * std::log(static_cast<double>(q)), std::log(c.convert_to<double>()));
  }
  if (pts.empty()) return -std::numeric_limits<double>::infinity();
  if (pts.size() < 2) throw DomainError("dimension fit needs at least two nonzero counts");
  double mx = 0, my = 0;
  for (auto [x, y] : pts) {
    mx += x;
    my += y;
  }
  mx /= static_cast<double>(pts.size());
  my /= static_cast<double>(pts.size());
  double sxy = 0, sxx = 0;
  for (auto [x, y] : pts) {
    sxy += (x - mx) * (y - my);
    sxx += (x - mx) * (x - mx);
  }
  return sxy / sxx;
}

nlohmann::json CountReport::to_json() const {
  const FieldSpec field = FieldSpec::make(p, e);
  auto cj = nlohmann::json::array();
  for (auto x : c) cj.push_back(field.coeffs(x));
  auto rows = nlohmann::json::array();
  for (std::size_t i = 0; i < counts.size(); ++i) {
    nlohmann::json row = {{"r", counts[i].first}, {"count", counts[i].second.str()}};
    if (i < reference.size()) row["reference"] = reference[i].str();
    rows.push_back(row);
  }
  nlohmann::json out = {{"n", n},   {"m", m},           {"c", cj},      {"q", q},
                        {"p", p},   {"e", e},           {"target", target}, {"counts", rows},
                        {"reference", expected_dimension}};
  if (std::isfinite(slope)) out["slope"] = slope;
  else out["slope"] = nullptr;
  return out;
}

CountReport count_report(const ShortIntervalSpec& spec, VarietyTarget target, int ext_max,
                         const std::vector<int>& blocks, Budget budget) {
  spec.validate();
  if (ext_max < 1) throw DomainError("ext-max must be at least 1");
  CountReport rep;
  rep.p = spec.field.p();
  rep.e = spec.field.e();
  rep.q = spec.field.q();
  rep.n = spec.n;
  rep.m = spec.m;
  rep.c = spec.c;
  const int p = static_cast<int>(spec.field.p());
  for (int r = 1; r <= ext_max; ++r) {
    BigInt count;
    switch (target) {
      case VarietyTarget::kX:
        count = count_points_X(spec, r, budget);
        break;
      case VarietyTarget::kQuotient:
        count = count_points_quotient(spec, blocks, r, budget);
        break;
      case VarietyTarget::kRCone:
        count = count_R_cone(spec.field, spec.n, spec.m, r, budget);
        break;
    }
    rep.counts.emplace_back(r, count);
    if (target != VarietyTarget::kRCone) {
      rep.reference.push_back(big_pow(spec.field.q(), static_cast<unsigned>(r * (spec.n - spec.m))));
    }
  }
  switch (target) {
    case VarietyTarget::kX:
      rep.target = "X";
      break;
    case VarietyTarget::kQuotient: {
      rep.target = "quotient:";
      for (std::size_t i = 0; i < blocks.size(); ++i) rep.target += (i ? "," : "") + std::to_string(blocks[i]);
      break;
    }
    case VarietyTarget::kRCone:
      rep.target = "rcone";
      break;
  }
  rep.expected_dimension = target == VarietyTarget::kRCone ? spec.n / p - spec.m / p : spec.n - spec.m;
  std::size_t nonzero = 0;
  for (const auto& [r, c] : rep.counts) nonzero += c > 0 ? 1 : 0;
  if (nonzero == 0) {
    rep.slope = -std::numeric_limits<double>::infinity();
  } else if (nonzero >= 2) {
    rep.slope = dimension_fit(rep.counts, rep.q);
  } else {
    rep.slope = std::numeric_limits<double>::quiet_NaN();
  }
  return rep;
}

}  // namespace ffsi
