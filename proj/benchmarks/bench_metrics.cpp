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

#include <vector>

#include "fmf/filter.hpp"
#include "fmf/pixel_metrics.hpp"
#include "fmf/rng.hpp"

namespace {

using namespace fmf;

RgbPixel random_pixel(Rng& rng) {
    return {{static_cast<std::uint8_t>(rng.next_channel()),
             static_cast<std::uint8_t>(rng.next_channel()),
             static_cast<std::uint8_t>(rng.next_channel())}};
}

Window random_window(Rng& rng) {
    std::vector<RgbPixel> pixels;
    for (int i = 0; i < 9; ++i) pixels.push_back(random_pixel(rng));
    return Window(3, std::move(pixels));
}

void BM_FuzzyPixelMetric(benchmark::State& state) {
    Rng rng(1);
    const RgbPixel a = random_pixel(rng);
    const RgbPixel b = random_pixel(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fuzzy_pixel_metric(a, b, 1024.0));
    }
}
BENCHMARK(BM_FuzzyPixelMetric);

void BM_FuzzyTripleMetric(benchmark::State& state) {
    Rng rng(2);
    const RgbPixel a = random_pixel(rng);
    const RgbPixel b = random_pixel(rng);
    const RgbPixel c = random_pixel(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fuzzy_triple_metric(a, b, c, 1024.0));
    }
}
BENCHMARK(BM_FuzzyTripleMetric);

void BM_AggregateFull(benchmark::State& state) {
    Rng rng(3);
    const Window w = random_window(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(agg_fuzzy_triples_full(w, 1024.0));
    }
}
BENCHMARK(BM_AggregateFull);

void BM_AggregateScheme(benchmark::State& state) {
    Rng rng(3);
    const Window w = random_window(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(agg_fuzzy_triples_scheme(w, 1024.0));
    }
}
BENCHMARK(BM_AggregateScheme);

void BM_AggregatePairwise(benchmark::State& state) {
    Rng rng(3);
    const Window w = random_window(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(agg_fuzzy_pairwise(w, 1024.0));
    }
}
BENCHMARK(BM_AggregatePairwise);

} // namespace
