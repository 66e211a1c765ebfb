// Copyright 2026 The cnpkit Authors
// SPDX-License-Identifier: Apache-2.0

// OpenMP kernels against the serial reference.

#include <benchmark/benchmark.h>

#include "cnpkit/certify.hpp"
#include "cnpkit/reference.hpp"
#include "cnpkit/sampling.hpp"

namespace {

using namespace cnpkit;

std::vector<Point> dirichlet_points(Index n) {
  Rng rng(7);
  return random_points(kernel::Dirichlet{}, n, 0.8, rng);
}

void BM_GramParallel(benchmark::State& state) {
  const auto pts = dirichlet_points(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(assemble_gram(kernel::Dirichlet{}, pts));
}

void BM_GramSerial(benchmark::State& state) {
  const auto pts = dirichlet_points(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(reference::assemble_gram(kernel::Dirichlet{}, pts));
}

void BM_FScanParallel(benchmark::State& state) {
  const HermitianMatrix g = assemble_gram(kernel::Szego{}, dirichlet_points(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(f_matrix_scan(g));
}

void BM_FScanSerial(benchmark::State& state) {
  const HermitianMatrix g = assemble_gram(kernel::Szego{}, dirichlet_points(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::f_matrix_scan(g));
}

}  // namespace

BENCHMARK(BM_GramParallel)->Arg(32)->Arg(128)->Arg(512);
BENCHMARK(BM_GramSerial)->Arg(32)->Arg(128)->Arg(512);
BENCHMARK(BM_FScanParallel)->Arg(16)->Arg(48);
BENCHMARK(BM_FScanSerial)->Arg(16)->Arg(48);

BENCHMARK_MAIN();
