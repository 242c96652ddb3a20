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

#ifndef FMF_FILTER_HPP
#define FMF_FILTER_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "fmf/image.hpp"

namespace fmf {

/// Square pixel neighbourhood, row-major, odd side >= 3. Index 0 is the
/// top-left position; the centre sits at index (side*side)/2 (index 4 in a
/// 3x3 window).
struct Window {
    int side = 3;
    std::vector<RgbPixel> pixels;

    Window(int side_, std::vector<RgbPixel> pixels_);

    int size() const { return side * side; }
    int center_index() const { return (side * side) / 2; }
};

/// Window copied from the neighbourhood of (x,y); coordinates outside the
/// image replicate the nearest edge pixel, so border pixels get full windows.
Window extract_window(const RgbImage& image, int x, int y, int side);

enum class SelectionSense {
    argmin,
    argmax,
};

/// Per-position aggregate values plus the selected index. Ties prefer the
/// window centre when it attains the optimum and the lowest index otherwise,
/// so filtering leaves already-clean regions untouched.
struct WindowAggregate {
    std::vector<double> values;
    int selected = 0;
    SelectionSense sense = SelectionSense::argmin;
};

/// Sum of Minkowski distances from each position to every other position;
/// selection minimizes (classical vector median ranking).
WindowAggregate agg_classical(const Window& window, double p);

/// Sum of pairwise fuzzy nearness degrees from each position to every other
/// position; selection maximizes.
WindowAggregate agg_fuzzy_pairwise(const Window& window, double smoothing);

/// Sum of triple nearness degrees over all pairs of other positions -
/// C(n-1,2) terms per position (28 in a 3x3 window); selection maximizes.
WindowAggregate agg_fuzzy_triples_full(const Window& window, double smoothing);

/// Reduced 3x3 aggregate: each position keeps exactly four triple terms,
/// pairing it with four disjoint position pairs that cover the remaining
/// eight neighbours (see scheme_partner_pairs). Selection maximizes.
/// Windows with side != 3 are rejected.
WindowAggregate agg_fuzzy_triples_scheme(const Window& window, double smoothing);

/// The partner-pair table of the reduced aggregate, 0-based. Entries for
/// positions 0, 1 and 4 (corner, edge, centre representatives) are fixed;
/// the remaining corner rows are the images of row 0 and the remaining edge
/// rows the images of row 1 under the dihedral symmetry of the 3x3 grid that
/// maps the representative onto the target position. Every row consists of
/// four disjoint pairs covering the other eight positions.
using SchemePairs = std::array<std::pair<int, int>, 4>;
const std::array<SchemePairs, 9>& scheme_partner_pairs();

/// The window pixel at the aggregate's selected index.
RgbPixel select_output(const WindowAggregate& aggregate, const Window& window);

enum class FilterKind {
    vmf,          ///< classical vector median (Minkowski distance sums)
    fvmf,         ///< fuzzy vector median (pairwise nearness sums)
    fvmlf_full,   ///< fuzzy vector median-like, all C(n-1,2) triples
    fvmlf_scheme, ///< fuzzy vector median-like, reduced 3x3 scheme
};

FilterKind filter_kind_from_string(const std::string& name);
std::string to_string(FilterKind kind);

struct FilterParams {
    double p = 2.0;           ///< Minkowski exponent (vmf)
    double smoothing = 1024.0; ///< fuzzy smoothing constant (fvmf, fvmlf)
    int side = 3;             ///< window side, odd, >= 3
    int threads = 1;          ///< 0 = hardware concurrency
};

/// Applies the selected filter over every pixel with replicate border
/// padding. Output pixels depend only on the input image, so rows are
/// processed independently; any thread count produces output identical to
/// the sequential result.
RgbImage filter_image(const RgbImage& image, FilterKind kind, const FilterParams& params);

} // namespace fmf

#endif // FMF_FILTER_HPP
