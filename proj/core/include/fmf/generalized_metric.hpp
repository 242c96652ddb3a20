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

#ifndef FMF_GENERALIZED_METRIC_HPP
#define FMF_GENERALIZED_METRIC_HPP

#include <algorithm>
#include <cmath>
#include <concepts>
#include <functional>
#include <span>
#include <vector>

#include "fmf/errors.hpp"

namespace fmf {

/// An n-argument distance functional on points of type P. The evaluator maps
/// n points to a nonnegative real and must satisfy the generalized n-metric
/// axioms (coincidence, positivity on distinct points, the repeated-point
/// inequality, total symmetry, and the witness-point triangle inequality).
/// Axiom conformance is checked by sampling in the axiom harness, not
/// enforced here.
template <typename P>
struct GeneralizedNMetric {
    int arity = 3;
    std::function<double(std::span<const P>)> evaluate;
};

namespace detail {

/// Sums after sorting ascending. Fixing the accumulation order makes values
/// that sum the same multiset of terms bit-identical, which in turn makes
/// permutation symmetry of the constructions below exact rather than
/// approximate.
inline double sorted_sum(std::vector<double>& terms) {
    std::sort(terms.begin(), terms.end());
    double acc = 0.0;
    for (double v : terms) acc += v;
    return acc;
}

template <typename P>
std::vector<P> sorted_points(std::span<const P> points) {
    std::vector<P> sorted(points.begin(), points.end());
    std::sort(sorted.begin(), sorted.end());
    return sorted;
}

} // namespace detail

inline void require_min_arity(std::size_t n, std::size_t min, const char* what) {
    if (n < min) {
        throw ArityError(std::string(what) + ": needs at least " +
                         std::to_string(min) + " points, got " + std::to_string(n));
    }
}

/// Sum of all pairwise absolute differences of n >= 3 reals.
double gn_rho(std::span<const double> points);

enum class GnCombine {
    sum,
    max,
};

/// Builds a generalized n-metric from an ordinary pairwise metric by either
/// summing or maximizing over all point pairs.
template <typename P, typename Metric>
    requires std::totally_ordered<P>
double gn_from_metric(std::span<const P> points, Metric&& base, GnCombine mode) {
    require_min_arity(points.size(), 3, "gn_from_metric");
    if (mode == GnCombine::max) {
        double best = 0.0;
        for (std::size_t i = 0; i < points.size(); ++i)
            for (std::size_t j = i + 1; j < points.size(); ++j)
                best = std::max(best, static_cast<double>(base(points[i], points[j])));
        return best;
    }
    const auto pts = detail::sorted_points(points);
    std::vector<double> terms;
    terms.reserve(pts.size() * (pts.size() - 1) / 2);
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            terms.push_back(static_cast<double>(base(pts[i], pts[j])));
    return detail::sorted_sum(terms);
}

GeneralizedNMetric<double> make_gn_rho(int arity);

template <typename P>
GeneralizedNMetric<P> make_gn_from_metric(int arity,
                                          std::function<double(const P&, const P&)> base,
                                          GnCombine mode) {
    require_min_arity(static_cast<std::size_t>(arity), 3, "make_gn_from_metric");
    return {arity, [base = std::move(base), mode](std::span<const P> pts) {
                return gn_from_metric<P>(pts, base, mode);
            }};
}

} // namespace fmf

#endif // FMF_GENERALIZED_METRIC_HPP
