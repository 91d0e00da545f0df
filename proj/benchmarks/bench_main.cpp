// Copyright 2026 The crpchips Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "crpchips/chip.hpp"
#include "crpchips/dirichlet.hpp"
#include "crpchips/engines.hpp"
#include "crpchips/ewens.hpp"
#include "crpchips/permutation.hpp"
#include "crpchips/restaurant.hpp"
#include "crpchips/simulate.hpp"

namespace {

using namespace crpchips;

Permutation random_perm(int n, std::mt19937_64& rng) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i + 1;
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(img);
}

void BM_EwensPushforward(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto report = pushforward_check(n, EwensParams{Rational(3, 2)});
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_EwensPushforward)->DenseRange(4, 7);

void BM_ChipMultiply(benchmark::State& state) {
  const int deg = static_cast<int>(state.range(0));
  std::mt19937_64 rng(42);
  std::vector<Chip> chips;
  for (int i = 0; i < 64; ++i) {
    chips.push_back(
        chip_from_pair(random_perm(deg, rng), random_perm(deg, rng), 4, 4));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    Chip c = multiply(chips[i % 64], chips[(i + 1) % 64]);
    benchmark::DoNotOptimize(c);
    ++i;
  }
}
BENCHMARK(BM_ChipMultiply)->DenseRange(6, 12, 3);

void BM_ChipFromPair(benchmark::State& state) {
  const int deg = static_cast<int>(state.range(0));
  std::mt19937_64 rng(7);
  Permutation g1 = random_perm(deg, rng);
  Permutation g2 = random_perm(deg, rng);
  for (auto _ : state) {
    Chip c = chip_from_pair(g1, g2, 3, 3);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_ChipFromPair)->DenseRange(6, 12, 3);

void BM_ActCycles(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Restaurant r = sample_tables(Rational(1), SampleMethod::kStickBreaking,
                               Truncation{10, 1e-6}, Seed{11});
  std::vector<int> ks = n == 4 ? std::vector<int>{2, 2} : std::vector<int>{n};
  for (auto _ : state) {
    MixtureMeasure m = act_cycles(ks, r);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_ActCycles)->DenseRange(2, 4);

void BM_SimulateCycles(benchmark::State& state) {
  Restaurant r = sample_tables(Rational(1), SampleMethod::kStickBreaking,
                               Truncation{24, 1e-9}, Seed{11});
  SimOptions opt;
  opt.samples = state.range(0);
  opt.u_grid = {0.5, 1.0, 2.0};
  opt.threads = 1;
  for (auto _ : state) {
    SimSummary s = simulate_cycles({2}, r, opt, Seed{5});
    benchmark::DoNotOptimize(s);
  }
  state.SetItemsProcessed(state.iterations() * opt.samples);
}
BENCHMARK(BM_SimulateCycles)->Arg(1000)->Arg(10000);

void BM_LaplaceClosed(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  DirichletSpec spec;
  spec.k.assign(p, 2);
  spec.ell = 1.3;
  std::vector<std::complex<double>> u;
  for (int i = 0; i < p; ++i) u.emplace_back(0.1 + 0.37 * i, 0.0);
  for (auto _ : state) {
    auto v = laplace_closed(spec, u);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_LaplaceClosed)->DenseRange(2, 8, 2);

void BM_SampleTables(benchmark::State& state) {
  const auto method = state.range(0) == 0 ? SampleMethod::kPoissonProcess
                                          : SampleMethod::kStickBreaking;
  std::uint64_t s = 0;
  for (auto _ : state) {
    Restaurant r =
        sample_tables(Rational(1, 2), method, Truncation{64, 1e-9}, Seed{s++});
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_SampleTables)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
