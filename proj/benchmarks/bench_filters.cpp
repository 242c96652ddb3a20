/*
 * Copyright 2026 The fmf Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include "fmf/filter.hpp"
#include "fmf/noise.hpp"
#include "fmf/rng.hpp"

namespace {

using namespace fmf;

RgbImage noisy_image(int side) {
    RgbImage image(side, side);
    for (int y = 0; y < side; ++y)
        for (int x = 0; x < side; ++x)
            image.at(x, y) = {{static_cast<std::uint8_t>(x * 255 / (side - 1)),
                               static_cast<std::uint8_t>(y * 255 / (side - 1)),
                               static_cast<std::uint8_t>((x ^ y) & 0xFF)}};
    NoiseSpec spec;
    spec.density = 0.1;
    spec.seed = 42;
    return add_impulse(image, spec);
}

void run_filter_bench(benchmark::State& state, FilterKind kind) {
    const RgbImage image = noisy_image(static_cast<int>(state.range(0)));
    FilterParams params;
    params.threads = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(filter_image(image, kind, params));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

void BM_FilterVmf(benchmark::State& state) { run_filter_bench(state, FilterKind::vmf); }
void BM_FilterFvmf(benchmark::State& state) { run_filter_bench(state, FilterKind::fvmf); }
void BM_FilterFvmlfFull(benchmark::State& state) {
    run_filter_bench(state, FilterKind::fvmlf_full);
}
void BM_FilterFvmlfScheme(benchmark::State& state) {
    run_filter_bench(state, FilterKind::fvmlf_scheme);
}

BENCHMARK(BM_FilterVmf)->Args({64, 1})->Args({128, 1});
BENCHMARK(BM_FilterFvmf)->Args({64, 1})->Args({128, 1});
BENCHMARK(BM_FilterFvmlfFull)->Args({64, 1})->Args({128, 1});
BENCHMARK(BM_FilterFvmlfScheme)->Args({64, 1})->Args({128, 1})->Args({128, 4});

} // namespace
