// Copyright 2026 The QARA Filter Authors
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
//
// Serial reference vs OpenMP kernel timings.

#include "qara/filter.hpp"
#include "qara/io.hpp"
#include "qara/kernels.hpp"
#include "qara/random.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

using namespace qara;
using qara::kernels::Exec;

namespace {

std::vector<double> uniform_state(int n) {
    const std::size_t dim = std::size_t{1} << n;
    return std::vector<double>(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
}

Exec exec_of(const benchmark::State &state) {
    return state.range(1) == 0 ? Exec::Serial : Exec::Parallel;
}

void BM_ApplyGate(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    auto amps = uniform_state(n);
    const GateOp gate = GateOp::ry(n / 2, 0.3, {{0, Polarity::OnOne}});
    for (auto _ : state) {
        kernels::apply_gate(amps, n, gate, exec_of(state));
        benchmark::DoNotOptimize(amps.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(amps.size()));
}
BENCHMARK(BM_ApplyGate)->ArgsProduct({{12, 16, 20, 22}, {0, 1}})->ArgNames({"qubits", "omp"});

void BM_BranchMarginal(benchmark::State &state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    Rng rng(5);
    std::vector<double> half(m);
    for (double &h : half) {
        h = (uniform01(rng) - 0.5) * 3.0;
    }
    for (auto _ : state) {
        auto out = state.range(1) == 0 ? kernels::branch_marginal_serial(half)
                                       : kernels::branch_marginal_parallel(half);
        benchmark::DoNotOptimize(out.data());
    }
}
BENCHMARK(BM_BranchMarginal)->ArgsProduct({{64, 256, 1024}, {0, 1}})->ArgNames({"M", "omp"});

void BM_FilterImage(benchmark::State &state) {
    const auto side = static_cast<std::size_t>(state.range(0));
    const GrayImage img = io::generate_image(io::ImageKind::Textured, side, side, 1);
    FilterConfig cfg;
    cfg.window = static_cast<std::size_t>(state.range(2));
    for (auto _ : state) {
        auto out = filter_image(img, cfg, Algorithm::Qara, exec_of(state));
        benchmark::DoNotOptimize(out.image.pixels.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(side * side));
}
BENCHMARK(BM_FilterImage)
    ->ArgsProduct({{128, 256}, {0, 1}, {8, 16}})
    ->ArgNames({"side", "omp", "M"})
    ->Unit(benchmark::kMillisecond);

void BM_MedianImage(benchmark::State &state) {
    const auto side = static_cast<std::size_t>(state.range(0));
    const GrayImage img = io::generate_image(io::ImageKind::Textured, side, side, 1);
    FilterConfig cfg;
    cfg.window = static_cast<std::size_t>(state.range(2));
    for (auto _ : state) {
        auto out = filter_image(img, cfg, Algorithm::Median, exec_of(state));
        benchmark::DoNotOptimize(out.image.pixels.data());
    }
}
BENCHMARK(BM_MedianImage)
    ->ArgsProduct({{256}, {0, 1}, {8, 16}})
    ->ArgNames({"side", "omp", "M"})
    ->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
