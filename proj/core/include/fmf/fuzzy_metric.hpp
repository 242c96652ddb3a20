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

#ifndef FMF_FUZZY_METRIC_HPP
#define FMF_FUZZY_METRIC_HPP

#include <cmath>
#include <functional>
#include <type_traits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fmf/errors.hpp"
#include "fmf/generalized_metric.hpp"
#include "fmf/tnorm.hpp"

namespace fmf {

/// An n-argument, t-parameterized degree of nearness into (0,1].
///
/// The evaluator signature is uniform across stationary and non-stationary
/// metrics: a stationary metric accepts the t argument and ignores it. The
/// degree is 1 exactly when all points coincide and grows toward 1 as points
/// cluster; the t-norm combines degrees in the triangle inequality.
template <typename P>
struct FuzzyNMetric {
    int arity = 2;
    TNorm tnorm{TNormKind::product};
    bool stationary = false;
    std::function<double(std::span<const P>, double)> evaluate;
};

inline void require_positive_t(double t) {
    if (!(t > 0.0)) throw DomainError("fuzzy metric: t must be positive");
}

/// Degree of nearness t/(t + d(x,y)) induced by an ordinary metric d.
template <typename P, typename Metric>
double std_fuzzy_metric(Metric&& base, const P& x, const P& y, double t) {
    require_positive_t(t);
    return t / (t + static_cast<double>(base(x, y)));
}

template <typename P>
FuzzyNMetric<P> make_standard_fuzzy_metric(std::function<double(const P&, const P&)> base) {
    return {2, product_tnorm, false,
            [base = std::move(base)](std::span<const P> pts, double t) {
                return std_fuzzy_metric<P>(base, pts[0], pts[1], t);
            }};
}

/// Degree of nearness t/(t + G(points)) induced by a generalized n-metric G.
template <typename P>
double fuzzy_from_gn(const GeneralizedNMetric<P>& gn,
                     std::span<const std::type_identity_t<P>> points, double t) {
    require_positive_t(t);
    if (static_cast<int>(points.size()) != gn.arity) {
        throw ArityError("fuzzy_from_gn: expected " + std::to_string(gn.arity) +
                         " points, got " + std::to_string(points.size()));
    }
    return t / (t + gn.evaluate(points));
}

template <typename P>
FuzzyNMetric<P> make_fuzzy_from_gn(GeneralizedNMetric<P> gn) {
    const int arity = gn.arity;
    return {arity, product_tnorm, false,
            [gn = std::move(gn)](std::span<const P> pts, double t) {
                return fuzzy_from_gn(gn, pts, t);
            }};
}

namespace detail {

/// Product of the pair metric over all point pairs, in canonical (sorted)
/// order. Accepts tuples of any size >= 2; the public entry point enforces
/// the n >= 3 arity contract.
template <typename P>
double pairwise_product(const FuzzyNMetric<P>& pair_metric,
                        std::span<const std::type_identity_t<P>> points, double t) {
    const auto pts = sorted_points(points);
    double acc = 1.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const P pair[2] = {pts[i], pts[j]};
            acc *= pair_metric.evaluate(pair, t);
        }
    return acc;
}

template <typename P>
void require_product_pair_metric(const FuzzyNMetric<P>& pair_metric) {
    if (pair_metric.arity != 2)
        throw ArityError("pairwise product construction: pair metric must have arity 2");
    if (pair_metric.tnorm.kind() != TNormKind::product)
        throw UnsupportedConstruction(
            "pairwise product construction is only defined for the product t-norm");
}

} // namespace detail

/// Lifts a pairwise fuzzy metric F to n points as the product of F over all
/// pairs. Only valid under the product t-norm; any other t-norm is rejected.
template <typename P>
double product_construction(const FuzzyNMetric<P>& pair_metric,
                            std::span<const std::type_identity_t<P>> points, double t) {
    detail::require_product_pair_metric(pair_metric);
    require_min_arity(points.size(), 3, "product_construction");
    require_positive_t(t);
    return detail::pairwise_product(pair_metric, points, t);
}

template <typename P>
FuzzyNMetric<P> make_product_metric(FuzzyNMetric<P> pair_metric, int arity) {
    detail::require_product_pair_metric(pair_metric);
    require_min_arity(static_cast<std::size_t>(arity), 3, "make_product_metric");
    return {arity, product_tnorm, pair_metric.stationary,
            [pair_metric = std::move(pair_metric)](std::span<const P> pts, double t) {
                return product_construction(pair_metric, pts, t);
            }};
}

/// Residual of the algebraic identity tying the n-point product metric to
/// its (n-1)-point restrictions: the (n-2) power of the full value equals the
/// product of the metric over all leave-one-out subsets. Both sides are
/// evaluated independently; the result is their absolute difference, which
/// for well-conditioned inputs stays below 1e-12.
template <typename P>
double subset_identity_residual(const FuzzyNMetric<P>& pair_metric,
                                std::span<const std::type_identity_t<P>> points, double t) {
    detail::require_product_pair_metric(pair_metric);
    require_min_arity(points.size(), 3, "subset_identity_residual");
    require_positive_t(t);

    const auto pts = detail::sorted_points(points);
    const std::size_t n = pts.size();

    const double full = detail::pairwise_product<P>(pair_metric, pts, t);
    double lhs = 1.0;
    for (std::size_t k = 0; k + 2 < n; ++k) lhs *= full;

    double rhs = 1.0;
    std::vector<P> subset;
    subset.reserve(n - 1);
    for (std::size_t skip = 0; skip < n; ++skip) {
        subset.clear();
        for (std::size_t i = 0; i < n; ++i)
            if (i != skip) subset.push_back(pts[i]);
        rhs *= detail::pairwise_product<P>(pair_metric, subset, t);
    }
    return std::abs(lhs - rhs);
}

/// Channel vector of a point in a box domain, e.g. an RGB triple widened to
/// doubles. Values carry integer channel data but the functional is defined
/// for any reals inside the box.
using Channels = std::vector<double>;

/// Closed box [lo,hi]^channels together with the smoothing constant of the
/// min/max ratio metric. The smoothing constant shifts both the channel
/// minimum and maximum so the per-channel ratio stays in (0,1]; it must
/// exceed |lo| when lo is negative and merely be positive otherwise.
struct BoundedBox {
    double lo = 0.0;
    double hi = 255.0;
    double smoothing = 1024.0;
    int channels = 3;

    BoundedBox(double lo_, double hi_, double smoothing_, int channels_);

    /// Uniform lower bound of the metric over the box: ((lo+K)/(hi+K))^channels.
    double floor_value() const;
};

/// Stationary degree of nearness of r channel vectors: the product over
/// channels of (per-channel min + K)/(per-channel max + K). Equals 1 exactly
/// when all vectors coincide and is bounded below by box.floor_value() for
/// vectors inside the box.
double stationary_frn(std::span<const Channels> vectors, const BoundedBox& box);

/// FuzzyNMetric view of stationary_frn with a fixed tuple arity; the t
/// argument is accepted and ignored.
FuzzyNMetric<Channels> make_stationary_frn(int tuple_arity, const BoundedBox& box);

/// Pairwise fuzzy metric induced by an n-ary one: the t-norm combination of
/// the two extreme repetition patterns (x,y,...,y) and (x,x,...,x,y), each at
/// half the time parameter.
template <typename P>
double induced_pairwise(const FuzzyNMetric<P>& fn, const P& x, const P& y, double t) {
    require_positive_t(t);
    const std::size_t n = static_cast<std::size_t>(fn.arity);
    std::vector<P> tuple(n, y);
    tuple[0] = x;
    const double first = fn.evaluate(tuple, t / 2.0);
    for (std::size_t i = 1; i + 1 < n; ++i) tuple[i] = x;
    const double second = fn.evaluate(tuple, t / 2.0);
    return fn.tnorm.apply(first, second);
}

template <typename P>
FuzzyNMetric<P> make_induced_pairwise(FuzzyNMetric<P> fn) {
    const TNorm tnorm = fn.tnorm;
    const bool stationary = fn.stationary;
    return {2, tnorm, stationary,
            [fn = std::move(fn)](std::span<const P> pts, double t) {
                return induced_pairwise(fn, pts[0], pts[1], t);
            }};
}

} // namespace fmf

#endif // FMF_FUZZY_METRIC_HPP
