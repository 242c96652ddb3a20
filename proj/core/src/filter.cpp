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

#include "fmf/filter.hpp"

#include <algorithm>
#include <thread>

#include "fmf/pixel_metrics.hpp"

namespace fmf {

namespace {

/// Accumulates in ascending order so positions whose terms form the same
/// multiset get bit-identical aggregates; ties are then exact and the
/// centre/lowest-index rule resolves them deterministically.
double sorted_sum(std::vector<double>& terms) {
    std::sort(terms.begin(), terms.end());
    double acc = 0.0;
    for (double v : terms) acc += v;
    return acc;
}

int pick_selected(const std::vector<double>& values, SelectionSense sense, int center) {
    int best = 0;
    for (std::size_t i = 1; i < values.size(); ++i) {
        const bool better = sense == SelectionSense::argmin
                                ? values[i] < values[static_cast<std::size_t>(best)]
                                : values[i] > values[static_cast<std::size_t>(best)];
        if (better) best = static_cast<int>(i);
    }
    if (values[static_cast<std::size_t>(center)] == values[static_cast<std::size_t>(best)])
        return center;
    return best;
}

void require_valid_side(int side) {
    if (side < 3 || side % 2 == 0)
        throw UnsupportedWindow("window side must be an odd integer >= 3");
}

} // namespace

Window::Window(int side_, std::vector<RgbPixel> pixels_)
    : side(side_), pixels(std::move(pixels_)) {
    require_valid_side(side);
    if (static_cast<int>(pixels.size()) != side * side)
        throw UnsupportedWindow("window pixel count must equal side*side");
}

Window extract_window(const RgbImage& image, int x, int y, int side) {
    require_valid_side(side);
    const int half = side / 2;
    std::vector<RgbPixel> pixels;
    pixels.reserve(static_cast<std::size_t>(side) * static_cast<std::size_t>(side));
    for (int dy = -half; dy <= half; ++dy) {
        const int sy = std::clamp(y + dy, 0, image.height() - 1);
        for (int dx = -half; dx <= half; ++dx) {
            const int sx = std::clamp(x + dx, 0, image.width() - 1);
            pixels.push_back(image.at(sx, sy));
        }
    }
    return Window(side, std::move(pixels));
}

WindowAggregate agg_classical(const Window& window, double p) {
    const int n = window.size();
    WindowAggregate agg;
    agg.sense = SelectionSense::argmin;
    agg.values.resize(static_cast<std::size_t>(n));
    std::vector<double> terms;
    terms.reserve(static_cast<std::size_t>(n - 1));
    for (int i = 0; i < n; ++i) {
        terms.clear();
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            terms.push_back(lp_distance(window.pixels[static_cast<std::size_t>(i)],
                                        window.pixels[static_cast<std::size_t>(j)], p));
        }
        agg.values[static_cast<std::size_t>(i)] = sorted_sum(terms);
    }
    agg.selected = pick_selected(agg.values, agg.sense, window.center_index());
    return agg;
}

WindowAggregate agg_fuzzy_pairwise(const Window& window, double smoothing) {
    const int n = window.size();
    WindowAggregate agg;
    agg.sense = SelectionSense::argmax;
    agg.values.resize(static_cast<std::size_t>(n));
    std::vector<double> terms;
    terms.reserve(static_cast<std::size_t>(n - 1));
    for (int i = 0; i < n; ++i) {
        terms.clear();
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            terms.push_back(fuzzy_pixel_metric(window.pixels[static_cast<std::size_t>(i)],
                                               window.pixels[static_cast<std::size_t>(j)],
                                               smoothing));
        }
        agg.values[static_cast<std::size_t>(i)] = sorted_sum(terms);
    }
    agg.selected = pick_selected(agg.values, agg.sense, window.center_index());
    return agg;
}

WindowAggregate agg_fuzzy_triples_full(const Window& window, double smoothing) {
    const int n = window.size();
    WindowAggregate agg;
    agg.sense = SelectionSense::argmax;
    agg.values.resize(static_cast<std::size_t>(n));
    std::vector<double> terms;
    terms.reserve(static_cast<std::size_t>((n - 1) * (n - 2) / 2));
    for (int i = 0; i < n; ++i) {
        terms.clear();
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            for (int k = j + 1; k < n; ++k) {
                if (k == i) continue;
                terms.push_back(
                    fuzzy_triple_metric(window.pixels[static_cast<std::size_t>(i)],
                                        window.pixels[static_cast<std::size_t>(j)],
                                        window.pixels[static_cast<std::size_t>(k)], smoothing));
            }
        }
        agg.values[static_cast<std::size_t>(i)] = sorted_sum(terms);
    }
    agg.selected = pick_selected(agg.values, agg.sense, window.center_index());
    return agg;
}

const std::array<SchemePairs, 9>& scheme_partner_pairs() {
    // Corner rows derive from row 0, edge rows from row 1, through the grid
    // symmetry taking the representative to the target position; rows 0, 1
    // and 4 are fixed. All indices 0-based on the row-major 3x3 layout.
    static const std::array<SchemePairs, 9> table = {{
        {{{1, 3}, {2, 6}, {5, 7}, {4, 8}}}, // 0: top-left corner (representative)
        {{{0, 2}, {3, 5}, {6, 8}, {4, 7}}}, // 1: top edge (representative)
        {{{1, 5}, {0, 8}, {3, 7}, {4, 6}}}, // 2: top-right corner
        {{{0, 6}, {1, 7}, {2, 8}, {4, 5}}}, // 3: left edge
        {{{0, 8}, {1, 3}, {2, 6}, {5, 7}}}, // 4: centre
        {{{2, 8}, {1, 7}, {0, 6}, {3, 4}}}, // 5: right edge
        {{{3, 7}, {0, 8}, {1, 5}, {2, 4}}}, // 6: bottom-left corner
        {{{6, 8}, {3, 5}, {0, 2}, {1, 4}}}, // 7: bottom edge
        {{{5, 7}, {2, 6}, {1, 3}, {0, 4}}}, // 8: bottom-right corner
    }};
    return table;
}

WindowAggregate agg_fuzzy_triples_scheme(const Window& window, double smoothing) {
    if (window.side != 3)
        throw UnsupportedWindow("the reduced triple scheme is defined for 3x3 windows only");
    WindowAggregate agg;
    agg.sense = SelectionSense::argmax;
    agg.values.resize(9);
    const auto& table = scheme_partner_pairs();
    std::vector<double> terms;
    terms.reserve(4);
    for (int i = 0; i < 9; ++i) {
        terms.clear();
        for (const auto& [a, b] : table[static_cast<std::size_t>(i)]) {
            terms.push_back(
                fuzzy_triple_metric(window.pixels[static_cast<std::size_t>(i)],
                                    window.pixels[static_cast<std::size_t>(a)],
                                    window.pixels[static_cast<std::size_t>(b)], smoothing));
        }
        agg.values[static_cast<std::size_t>(i)] = sorted_sum(terms);
    }
    agg.selected = pick_selected(agg.values, agg.sense, window.center_index());
    return agg;
}

RgbPixel select_output(const WindowAggregate& aggregate, const Window& window) {
    if (aggregate.values.size() != window.pixels.size())
        throw UnsupportedWindow("aggregate and window sizes differ");
    return window.pixels[static_cast<std::size_t>(aggregate.selected)];
}

FilterKind filter_kind_from_string(const std::string& name) {
    if (name == "vmf") return FilterKind::vmf;
    if (name == "fvmf") return FilterKind::fvmf;
    if (name == "fvmlf-full") return FilterKind::fvmlf_full;
    if (name == "fvmlf-scheme") return FilterKind::fvmlf_scheme;
    throw DomainError("unknown filter kind: " + name);
}

std::string to_string(FilterKind kind) {
    switch (kind) {
    case FilterKind::vmf: return "vmf";
    case FilterKind::fvmf: return "fvmf";
    case FilterKind::fvmlf_full: return "fvmlf-full";
    case FilterKind::fvmlf_scheme: return "fvmlf-scheme";
    }
    return "unknown";
}

namespace {

WindowAggregate aggregate_for(const Window& window, FilterKind kind,
                              const FilterParams& params) {
    switch (kind) {
    case FilterKind::vmf: return agg_classical(window, params.p);
    case FilterKind::fvmf: return agg_fuzzy_pairwise(window, params.smoothing);
    case FilterKind::fvmlf_full: return agg_fuzzy_triples_full(window, params.smoothing);
    case FilterKind::fvmlf_scheme: return agg_fuzzy_triples_scheme(window, params.smoothing);
    }
    throw DomainError("unknown filter kind");
}

} // namespace

RgbImage filter_image(const RgbImage& image, FilterKind kind, const FilterParams& params) {
    require_valid_side(params.side);
    if (kind == FilterKind::fvmlf_scheme && params.side != 3)
        throw UnsupportedWindow("the reduced triple scheme is defined for 3x3 windows only");
    if (kind == FilterKind::vmf && !(params.p >= 1.0))
        throw DomainError("filter_image: p must be at least 1");
    if (kind != FilterKind::vmf && !(params.smoothing > 0.0))
        throw DomainError("filter_image: smoothing constant must be positive");

    RgbImage out(image.width(), image.height());
    const auto filter_rows = [&](int y_begin, int y_end) {
        for (int y = y_begin; y < y_end; ++y)
            for (int x = 0; x < image.width(); ++x) {
                const Window window = extract_window(image, x, y, params.side);
                out.at(x, y) = select_output(aggregate_for(window, kind, params), window);
            }
    };

    int threads = params.threads;
    if (threads == 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    threads = std::clamp(threads, 1, image.height());

    if (threads == 1) {
        filter_rows(0, image.height());
        return out;
    }

    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(threads));
    const int rows_per_worker = (image.height() + threads - 1) / threads;
    for (int w = 0; w < threads; ++w) {
        const int begin = w * rows_per_worker;
        const int end = std::min(begin + rows_per_worker, image.height());
        if (begin >= end) break;
        workers.emplace_back(filter_rows, begin, end);
    }
    for (auto& worker : workers) worker.join();
    return out;
}

} // namespace fmf
