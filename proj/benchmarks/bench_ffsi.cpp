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

#include <benchmark/benchmark.h>

#include "ffsi/enumerate.hpp"
#include "ffsi/factor.hpp"
#include "ffsi/interval.hpp"
#include "ffsi/lfunc.hpp"
#include "ffsi/symmetric.hpp"
#include "ffsi/variety.hpp"

namespace ffsi {
namespace {

void BM_Factor(benchmark::State& state) {
  const FieldSpec F = FieldSpec::make(static_cast<std::uint32_t>(state.range(0)));
  const int n = static_cast<int>(state.range(1));
  const std::uint64_t total = checked_pow(F.q(), static_cast<unsigned>(n));
  std::uint64_t idx = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(factor(monic_at(F, n, idx)));
    idx = (idx * 2654435761u + 1) % total;
  }
}
BENCHMARK(BM_Factor)->Args({2, 16})->Args({3, 12})->Args({7, 8})->Args({31, 6});

void BM_TypeTable(benchmark::State& state) {
  const FieldSpec F = FieldSpec::make(static_cast<std::uint32_t>(state.range(0)));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(FactorTypeTable::build(F, n));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(checked_pow(F.q(), static_cast<unsigned>(n))));
}
BENCHMARK(BM_TypeTable)->Args({2, 12})->Args({3, 8})->Args({5, 7})->Unit(benchmark::kMillisecond);

void BM_FactorizationFunction(benchmark::State& state) {
  const FieldSpec F = FieldSpec::make(3);
  const int n = static_cast<int>(state.range(0));
  const Poly f = monic_at(F, n, checked_pow(3, static_cast<unsigned>(n)) / 3);
  const FactorizationType type = factor(f).type();
  const RepSpec rep = IrreducibleRep{partitions(n)[partitions(n).size() / 2]};
  for (auto _ : state) benchmark::DoNotOptimize(factorization_function(rep, type));
}
BENCHMARK(BM_FactorizationFunction)->Arg(4)->Arg(8)->Arg(12);

void BM_Scan(benchmark::State& state) {
  const FieldSpec F = FieldSpec::make(static_cast<std::uint32_t>(state.range(0)));
  const int n = static_cast<int>(state.range(1));
  const FactorTypeTable table = FactorTypeTable::build(F, n);
  ScanOptions options;
  options.threads = static_cast<unsigned>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(scan_worst_case(DivisorK{2}, table, n / 2, options));
}
BENCHMARK(BM_Scan)->Args({3, 8, 1})->Args({3, 8, 4})->Args({5, 7, 1})->Args({5, 7, 4})->Unit(benchmark::kMillisecond);

void BM_CountX(benchmark::State& state) {
  const FieldSpec F = FieldSpec::make(static_cast<std::uint32_t>(state.range(0)));
  const int n = static_cast<int>(state.range(1));
  const int r = static_cast<int>(state.range(2));
  const ShortIntervalSpec s{F, n, 2, {F.one(), F.one()}};
  for (auto _ : state) benchmark::DoNotOptimize(count_points_X(s, r));
}
BENCHMARK(BM_CountX)->Args({3, 4, 1})->Args({3, 4, 2})->Args({3, 5, 2})->Args({5, 4, 1})->Unit(benchmark::kMillisecond);

void BM_RCone(benchmark::State& state) {
  const FieldSpec F = FieldSpec::make(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_R_cone(F, static_cast<int>(state.range(1)), 3, 2));
}
BENCHMARK(BM_RCone)->Args({2, 6})->Args({3, 6})->Unit(benchmark::kMillisecond);

void BM_Characters(benchmark::State& state) {
  const FieldSpec F = FieldSpec::make(static_cast<std::uint32_t>(state.range(0)));
  const int m = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_characters(F, m, true, true));
}
BENCHMARK(BM_Characters)->Args({3, 2})->Args({3, 3})->Args({5, 2})->Unit(benchmark::kMillisecond);

void BM_LPolynomial(benchmark::State& state) {
  const auto family = enumerate_characters(FieldSpec::make(static_cast<std::uint32_t>(state.range(0))),
                                           static_cast<int>(state.range(1)), true, true);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(l_polynomial(family[i]));
    i = (i + 1) % family.size();
  }
}
BENCHMARK(BM_LPolynomial)->Args({3, 3})->Args({5, 3});

void BM_Moment(benchmark::State& state) {
  const FieldSpec F = FieldSpec::make(static_cast<std::uint32_t>(state.range(0)));
  const std::vector<Complex> alphas(static_cast<std::size_t>(state.range(1)), Complex{0.1, 0.2});
  for (auto _ : state) benchmark::DoNotOptimize(moment(F, 2, alphas, 1, 16.0, Budget::standard(), 1));
}
BENCHMARK(BM_Moment)->Args({3, 1})->Args({3, 2})->Args({5, 2})->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace ffsi

BENCHMARK_MAIN();
