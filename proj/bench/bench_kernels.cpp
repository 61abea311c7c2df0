// Copyright 2026 The qtruth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference vs OpenMP kernels, plus the CHSH search end to end.

#include <benchmark/benchmark.h>

#include "qtruth/epr.hpp"
#include "qtruth/kernels.hpp"
#include "qtruth/random.hpp"

namespace {

using qtruth::Matrix;

Matrix random_matrix(long n, std::uint64_t seed) { return qtruth::random_unitary(n, seed).matrix(); }

void BM_MatmulSerial(benchmark::State &state) {
    const long n = state.range(0);
    const Matrix a = random_matrix(n, 1), b = random_matrix(n, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qtruth::kernels::serial::matmul(a, b));
    }
    state.SetComplexityN(n);
}

void BM_MatmulParallel(benchmark::State &state) {
    const long n = state.range(0);
    const Matrix a = random_matrix(n, 1), b = random_matrix(n, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qtruth::kernels::parallel::matmul(a, b));
    }
    state.SetComplexityN(n);
}

void BM_KronSerial(benchmark::State &state) {
    const long n = state.range(0);
    const Matrix a = random_matrix(n, 3), b = random_matrix(n, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qtruth::kernels::serial::kron(a, b));
    }
}

void BM_KronParallel(benchmark::State &state) {
    const long n = state.range(0);
    const Matrix a = random_matrix(n, 3), b = random_matrix(n, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qtruth::kernels::parallel::kron(a, b));
    }
}

void BM_TraceProductSerial(benchmark::State &state) {
    const long n = state.range(0);
    const Matrix a = random_matrix(n, 5), b = random_matrix(n, 6);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qtruth::kernels::serial::trace_product(a, b));
    }
}

void BM_TraceProductParallel(benchmark::State &state) {
    const long n = state.range(0);
    const Matrix a = random_matrix(n, 5), b = random_matrix(n, 6);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qtruth::kernels::parallel::trace_product(a, b));
    }
}

void BM_ChshSearch(benchmark::State &state) {
    qtruth::ChshSearchOptions opts;
    opts.execution = state.range(0) == 0 ? qtruth::Execution::serial : qtruth::Execution::parallel;
    for (auto _ : state) {
        benchmark::DoNotOptimize(qtruth::chsh_search(1, opts).best);
    }
}

} // namespace

BENCHMARK(BM_MatmulSerial)->RangeMultiplier(2)->Range(16, 256);
BENCHMARK(BM_MatmulParallel)->RangeMultiplier(2)->Range(16, 256);
BENCHMARK(BM_KronSerial)->RangeMultiplier(2)->Range(4, 32);
BENCHMARK(BM_KronParallel)->RangeMultiplier(2)->Range(4, 32);
BENCHMARK(BM_TraceProductSerial)->RangeMultiplier(2)->Range(16, 512);
BENCHMARK(BM_TraceProductParallel)->RangeMultiplier(2)->Range(16, 512);
BENCHMARK(BM_ChshSearch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
