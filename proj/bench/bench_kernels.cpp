// Copyright 2026 The hqcsim Authors
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

// Serial reference kernels against their OpenMP counterparts, plus the
// parallel error sweep against its serial twin.

#include <benchmark/benchmark.h>

#include <numbers>
#include <random>
#include <vector>

#include "hqc/kernels.hpp"
#include "hqc/sweep.hpp"

namespace {

using hqc::kernels::cplx;

std::vector<cplx> random_block(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::vector<cplx> v(count);
  for (auto& x : v) x = {g(rng), g(rng)};
  return v;
}

template <auto Kernel>
void matmul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_block(n * n, 1), b = random_block(n * n, 2);
  std::vector<cplx> out(n * n);
  for (auto _ : state) {
    Kernel(a, b, out, n);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n * n * n));
}

template <auto Kernel>
void kron(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_block(16, 3), b = random_block(n * n, 4);
  std::vector<cplx> out(16 * n * n);
  for (auto _ : state) {
    Kernel(a, 4, b, n, out);
    benchmark::DoNotOptimize(out.data());
  }
}

template <auto Run>
void sweep(benchmark::State& state) {
  hqc::SweepConfig c;
  c.schedule = hqc::schedule_u3(4, 1, 2, -std::numbers::pi / 4);
  c.bath = hqc::BathModel::zero(4);
  c.step = 0.02;
  for (auto _ : state) benchmark::DoNotOptimize(Run(c));
}

}  // namespace

BENCHMARK(matmul<hqc::kernels::serial::matmul>)->Name("matmul/serial")->Arg(16)->Arg(64)->Arg(256);
BENCHMARK(matmul<hqc::kernels::omp::matmul>)->Name("matmul/omp")->Arg(16)->Arg(64)->Arg(256);
BENCHMARK(kron<hqc::kernels::serial::kron>)->Name("kron/serial")->Arg(4)->Arg(16)->Arg(64);
BENCHMARK(kron<hqc::kernels::omp::kron>)->Name("kron/omp")->Arg(4)->Arg(16)->Arg(64);
BENCHMARK(sweep<hqc::run_sweep_serial>)->Name("sweep/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(sweep<hqc::run_sweep>)->Name("sweep/omp")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
