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

#ifndef FMF_AXIOM_CHECKS_HPP
#define FMF_AXIOM_CHECKS_HPP

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "fmf/axiom_report.hpp"
#include "fmf/errors.hpp"
#include "fmf/fuzzy_metric.hpp"
#include "fmf/generalized_metric.hpp"
#include "fmf/rng.hpp"
#include "fmf/sample_domains.hpp"

// Sampling-based verification of the metric axioms and of the propositions
// the constructions in fuzzy_metric.hpp are supposed to satisfy. Reports are
// deterministic given (seed, spec). Inequality axioms are compared with an
// absolute slack of 1e-12 to absorb floating-point summation error; equality
// axioms (coincidence, permutation symmetry) are compared exactly, which the
// canonical evaluation order of the constructions makes attainable.

namespace fmf {

inline constexpr double axiom_slack = 1e-12;

namespace detail {

template <typename Domain>
std::string format_tuple(std::span<const typename Domain::Point> pts) {
    std::string out = "[";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) out += "; ";
        out += Domain::format(pts[i]);
    }
    out += ']';
    return out;
}

template <typename Domain>
std::vector<typename Domain::Point> sample_tuple(const Domain& domain, int arity, Rng& rng) {
    std::vector<typename Domain::Point> tuple;
    tuple.reserve(static_cast<std::size_t>(arity));
    for (int i = 0; i < arity; ++i) tuple.push_back(domain.sample(rng));
    return tuple;
}

template <typename Domain>
typename Domain::Point sample_distinct_from(const Domain& domain,
                                            const typename Domain::Point& avoid, Rng& rng) {
    for (;;) {
        auto candidate = domain.sample(rng);
        if (!(candidate == avoid)) return candidate;
    }
}

/// Guarantees at least one distinct pair among tuple[1..n-1], resampling the
/// last element if the tail collapsed to a single value.
template <typename Domain>
void ensure_distinct_tail(const Domain& domain, std::vector<typename Domain::Point>& tuple,
                          Rng& rng) {
    bool tail_uniform = true;
    for (std::size_t i = 2; i < tuple.size(); ++i)
        if (!(tuple[i] == tuple[1])) {
            tail_uniform = false;
            break;
        }
    if (tail_uniform) tuple.back() = sample_distinct_from(domain, tuple[1], rng);
}

template <typename P>
std::vector<P> shuffled(std::span<const P> pts, Rng& rng) {
    std::vector<P> out(pts.begin(), pts.end());
    for (std::size_t i = out.size(); i > 1; --i)
        std::swap(out[i - 1], out[rng.next_below(i)]);
    return out;
}

/// Tuple (x repeated n-1 times, y).
template <typename P>
std::vector<P> repeat_then(const P& x, const P& y, int arity) {
    std::vector<P> tuple(static_cast<std::size_t>(arity), x);
    tuple.back() = y;
    return tuple;
}

/// Tuple (x, y repeated n-1 times).
template <typename P>
std::vector<P> then_repeat(const P& x, const P& y, int arity) {
    std::vector<P> tuple(static_cast<std::size_t>(arity), y);
    tuple.front() = x;
    return tuple;
}

} // namespace detail

/// Checks the five generalized n-metric axioms on sampled tuples: coincidence
/// at zero, positivity on distinct points, the repeated-point lower bound,
/// permutation symmetry (against one random permutation per sample, compared
/// exactly), and the witness-point triangle inequality.
template <typename Domain>
std::vector<AxiomReport> check_gn_axioms(const GeneralizedNMetric<typename Domain::Point>& gn,
                                         const SampleSpec<Domain>& spec) {
    spec.validate();
    if (spec.tuple_arity != gn.arity)
        throw ArityError("check_gn_axioms: spec arity does not match the metric");

    AxiomReport g1{"G1"}, g2{"G2"}, g3{"G3"}, g4{"G4"}, g5{"G5"};
    Rng rng(spec.seed);
    const int n = gn.arity;

    for (int k = 0; k < spec.count; ++k) {
        auto tuple = detail::sample_tuple(spec.domain, n, rng);

        {
            std::vector<typename Domain::Point> equal(static_cast<std::size_t>(n), tuple[0]);
            const double v = gn.evaluate(equal);
            ++g1.checked;
            if (v != 0.0)
                g1.violations.push_back({detail::format_tuple<Domain>(equal), v, 0.0, 0.0});
        }
        {
            const auto& x1 = tuple[0];
            const auto x2 = detail::sample_distinct_from(spec.domain, x1, rng);
            const auto rep = detail::repeat_then(x1, x2, n);
            const double v = gn.evaluate(rep);
            ++g2.checked;
            if (!(v > 0.0))
                g2.violations.push_back({detail::format_tuple<Domain>(rep), v, 0.0, 0.0});
        }
        {
            detail::ensure_distinct_tail(spec.domain, tuple, rng);
            const auto rep = detail::repeat_then(tuple[0], tuple[1], n);
            const double lhs = gn.evaluate(rep);
            const double rhs = gn.evaluate(tuple);
            ++g3.checked;
            if (lhs > rhs + axiom_slack)
                g3.violations.push_back(
                    {detail::format_tuple<Domain>(tuple), lhs, rhs, axiom_slack});
        }
        {
            const auto perm = detail::shuffled<typename Domain::Point>(tuple, rng);
            const double a = gn.evaluate(tuple);
            const double b = gn.evaluate(perm);
            ++g4.checked;
            if (a != b)
                g4.violations.push_back({detail::format_tuple<Domain>(tuple), a, b, 0.0});
        }
        {
            const auto witness = spec.domain.sample(rng);
            const double lhs = gn.evaluate(tuple);
            const auto left = detail::then_repeat(tuple[0], witness, n);
            std::vector<typename Domain::Point> right(tuple.begin(), tuple.end());
            right[0] = witness;
            const double rhs = gn.evaluate(left) + gn.evaluate(right);
            ++g5.checked;
            if (lhs > rhs + axiom_slack)
                g5.violations.push_back({detail::format_tuple<Domain>(tuple) + " witness " +
                                             Domain::format(witness),
                                         lhs, rhs, axiom_slack});
        }
    }
    return {g1, g2, g3, g4, g5};
}

/// Checks the six generalized fuzzy n-metric axioms on sampled tuples:
/// positivity, the repeated-point upper bound, coincidence at one (both
/// directions, compared exactly), permutation symmetry (exact), the t-norm
/// triangle inequality with a sampled witness, and continuity in t checked
/// as bounded variation across adjacent t_grid values.
template <typename Domain>
std::vector<AxiomReport> check_fn_axioms(const FuzzyNMetric<typename Domain::Point>& fn,
                                         const SampleSpec<Domain>& spec) {
    spec.validate();
    if (spec.tuple_arity != fn.arity)
        throw ArityError("check_fn_axioms: spec arity does not match the metric");

    AxiomReport m1{"M1"}, m2{"M2"}, m3{"M3"}, m4{"M4"}, m5{"M5"}, m6{"M6"};
    Rng rng(spec.seed);
    const int n = fn.arity;
    const auto& grid = spec.t_grid;
    constexpr double continuity_bound = 0.5;

    for (int k = 0; k < spec.count; ++k) {
        auto tuple = detail::sample_tuple(spec.domain, n, rng);
        const double t = grid[static_cast<std::size_t>(k) % grid.size()];

        {
            const auto& x1 = tuple[0];
            const auto x2 = detail::sample_distinct_from(spec.domain, x1, rng);
            const auto rep = detail::repeat_then(x1, x2, n);
            const double v = fn.evaluate(rep, t);
            ++m1.checked;
            if (!(v > 0.0))
                m1.violations.push_back({detail::format_tuple<Domain>(rep), v, 0.0, 0.0});
        }
        if (n >= 3) {
            detail::ensure_distinct_tail(spec.domain, tuple, rng);
            const auto rep = detail::repeat_then(tuple[0], tuple[1], n);
            const double lhs = fn.evaluate(rep, t);
            const double rhs = fn.evaluate(tuple, t);
            ++m2.checked;
            if (lhs < rhs - axiom_slack)
                m2.violations.push_back(
                    {detail::format_tuple<Domain>(tuple), lhs, rhs, axiom_slack});
        }
        {
            std::vector<typename Domain::Point> equal(static_cast<std::size_t>(n), tuple[0]);
            const double at_equal = fn.evaluate(equal, t);
            ++m3.checked;
            if (at_equal != 1.0)
                m3.violations.push_back({detail::format_tuple<Domain>(equal), at_equal, 1.0, 0.0});

            // reverse direction: guarantee at least one distinct pair
            auto distinct = tuple;
            bool all_equal = true;
            for (const auto& p : distinct)
                if (!(p == distinct[0])) {
                    all_equal = false;
                    break;
                }
            if (all_equal)
                distinct.back() = detail::sample_distinct_from(spec.domain, distinct[0], rng);
            const double at_distinct = fn.evaluate(distinct, t);
            ++m3.checked;
            if (!(at_distinct < 1.0))
                m3.violations.push_back(
                    {detail::format_tuple<Domain>(distinct), at_distinct, 1.0, 0.0});
        }
        {
            const auto perm = detail::shuffled<typename Domain::Point>(tuple, rng);
            const double a = fn.evaluate(tuple, t);
            const double b = fn.evaluate(perm, t);
            ++m4.checked;
            if (a != b)
                m4.violations.push_back({detail::format_tuple<Domain>(tuple), a, b, 0.0});
        }
        {
            const auto witness = spec.domain.sample(rng);
            const double t1 = grid[rng.next_below(grid.size())];
            const double s = grid[rng.next_below(grid.size())];
            const auto left = detail::then_repeat(tuple[0], witness, n);
            std::vector<typename Domain::Point> right(tuple.begin(), tuple.end());
            right[0] = witness;
            const double lhs =
                fn.tnorm.apply(fn.evaluate(left, t1), fn.evaluate(right, s));
            const double rhs = fn.evaluate(tuple, t1 + s);
            ++m5.checked;
            if (lhs > rhs + axiom_slack)
                m5.violations.push_back({detail::format_tuple<Domain>(tuple) + " witness " +
                                             Domain::format(witness),
                                         lhs, rhs, axiom_slack});
        }
        {
            double prev = fn.evaluate(tuple, grid[0]);
            for (std::size_t g = 1; g < grid.size(); ++g) {
                const double cur = fn.evaluate(tuple, grid[g]);
                ++m6.checked;
                if (std::abs(cur - prev) > continuity_bound)
                    m6.violations.push_back(
                        {detail::format_tuple<Domain>(tuple), prev, cur, continuity_bound});
                prev = cur;
            }
        }
    }
    return {m1, m2, m3, m4, m5, m6};
}

/// The repeated-point power inequality: the degree of (x,y,...,y) at t
/// dominates the (n-1) power of the degree of (y,x,...,x) at t/(n-1).
template <typename Domain>
AxiomReport check_power_inequality(const FuzzyNMetric<typename Domain::Point>& fn,
                                   const SampleSpec<Domain>& spec) {
    spec.validate();
    if (fn.arity < 3) throw ArityError("check_power_inequality: metric arity must be >= 3");

    AxiomReport report{"power-inequality"};
    Rng rng(spec.seed);
    const int n = fn.arity;
    const auto& grid = spec.t_grid;

    for (int k = 0; k < spec.count; ++k) {
        const auto x = spec.domain.sample(rng);
        const auto y = spec.domain.sample(rng);
        const double t = grid[static_cast<std::size_t>(k) % grid.size()];
        const double lhs = fn.evaluate(detail::then_repeat(x, y, n), t);
        const double rhs =
            std::pow(fn.evaluate(detail::then_repeat(y, x, n), t / (n - 1)), n - 1);
        ++report.checked;
        if (lhs < rhs - axiom_slack)
            report.violations.push_back({Domain::format(x) + " " + Domain::format(y) + " t=" +
                                             double_to_string(t),
                                         lhs, rhs, axiom_slack});
    }
    return report;
}

/// Nondecreasing dependence on t across adjacent t_grid values.
template <typename Domain>
AxiomReport check_monotone_t(const FuzzyNMetric<typename Domain::Point>& fn,
                             const SampleSpec<Domain>& spec) {
    spec.validate();
    if (spec.t_grid.size() < 2)
        throw DomainError("check_monotone_t: t_grid needs at least two values");
    if (spec.tuple_arity != fn.arity)
        throw ArityError("check_monotone_t: spec arity does not match the metric");

    AxiomReport report{"monotone-t"};
    Rng rng(spec.seed);
    const auto& grid = spec.t_grid;

    for (int k = 0; k < spec.count; ++k) {
        const auto tuple = detail::sample_tuple(spec.domain, fn.arity, rng);
        double prev = fn.evaluate(tuple, grid[0]);
        for (std::size_t g = 1; g < grid.size(); ++g) {
            const double cur = fn.evaluate(tuple, grid[g]);
            ++report.checked;
            if (prev > cur + axiom_slack)
                report.violations.push_back(
                    {detail::format_tuple<Domain>(tuple) + " t=" + double_to_string(grid[g - 1]) +
                         ".." + double_to_string(grid[g]),
                     prev, cur, axiom_slack});
            prev = cur;
        }
    }
    return report;
}

/// Uniform lower bound: every sampled degree stays strictly above `bound`.
template <typename Domain>
AxiomReport check_f_bounded(const FuzzyNMetric<typename Domain::Point>& fn,
                            const SampleSpec<Domain>& spec, double bound) {
    spec.validate();
    if (!(bound >= 0.0 && bound <= 1.0))
        throw DomainError("check_f_bounded: bound must lie in [0,1]");
    if (spec.tuple_arity != fn.arity)
        throw ArityError("check_f_bounded: spec arity does not match the metric");

    AxiomReport report{"f-bounded"};
    Rng rng(spec.seed);
    const auto& grid = spec.t_grid;

    for (int k = 0; k < spec.count; ++k) {
        const auto tuple = detail::sample_tuple(spec.domain, fn.arity, rng);
        const double t = grid[static_cast<std::size_t>(k) % grid.size()];
        const double v = fn.evaluate(tuple, t);
        ++report.checked;
        if (!(v > bound))
            report.violations.push_back({detail::format_tuple<Domain>(tuple), v, bound, 0.0});
    }
    return report;
}

enum class BallKind {
    direct,  ///< ball of the n-ary metric via the (x, y,...,y) pattern
    induced, ///< ball of the induced pairwise metric
};

/// Open-ball membership test: candidate is inside the radius ball around
/// center when the degree of nearness exceeds 1 - radius.
template <typename P>
bool ball_contains(const FuzzyNMetric<P>& fn, const P& center, const P& candidate,
                   double radius, double t, BallKind which) {
    if (!(radius > 0.0 && radius < 1.0))
        throw DomainError("ball_contains: radius must lie in (0,1)");
    require_positive_t(t);
    const double degree =
        which == BallKind::direct
            ? fn.evaluate(detail::then_repeat(center, candidate, fn.arity), t)
            : induced_pairwise(fn, center, candidate, t);
    return degree > 1.0 - radius;
}

/// Ball containment linking the n-ary and induced pairwise topologies: a
/// candidate inside the direct ball of radius r/n at t/(n-1) must land inside
/// the induced ball of radius 1-(1-r/n)^n at 2t. Valid for the product
/// t-norm, whose power bound fixes the induced radius in closed form.
template <typename Domain>
AxiomReport check_ball_containment(const FuzzyNMetric<typename Domain::Point>& fn,
                                   const SampleSpec<Domain>& spec, double radius, double t) {
    spec.validate();
    if (fn.tnorm.kind() != TNormKind::product)
        throw UnsupportedConstruction("check_ball_containment requires the product t-norm");
    if (!(radius > 0.0 && radius < 1.0))
        throw DomainError("check_ball_containment: radius must lie in (0,1)");
    require_positive_t(t);

    AxiomReport report{"ball-containment"};
    Rng rng(spec.seed);
    const int n = fn.arity;
    const double inner_radius = radius / n;
    const double outer_radius = 1.0 - std::pow(1.0 - inner_radius, n);

    for (int k = 0; k < spec.count; ++k) {
        const auto x = spec.domain.sample(rng);
        // Alternate far and near candidates so the implication is exercised
        // non-vacuously.
        const auto y = (k % 2 == 0) ? spec.domain.sample(rng) : spec.domain.sample_near(x, rng);
        ++report.checked;
        if (ball_contains(fn, x, y, inner_radius, t / (n - 1), BallKind::direct) &&
            !ball_contains(fn, x, y, outer_radius, 2.0 * t, BallKind::induced)) {
            report.violations.push_back({Domain::format(x) + " " + Domain::format(y),
                                         inner_radius, outer_radius, 0.0});
        }
    }
    return report;
}

/// Separation of two distinct points by disjoint open balls. The shared ball
/// radius follows the construction that makes the triangle inequality yield
/// a contradiction for any common member: pick r0 halfway between the degree
/// of (x,y,...,y) and 1, then the ball level r1 so that n t-norm factors of
/// r1 still dominate r0.
template <typename Domain>
AxiomReport check_hausdorff_separation(const FuzzyNMetric<typename Domain::Point>& fn,
                                       const typename Domain::Point& x,
                                       const typename Domain::Point& y, double t,
                                       const SampleSpec<Domain>& spec) {
    spec.validate();
    require_positive_t(t);
    if (x == y) throw DomainError("check_hausdorff_separation: points must be distinct");

    AxiomReport report{"hausdorff-separation"};
    const int n = fn.arity;
    const double r = fn.evaluate(detail::then_repeat(x, y, n), t);
    if (!(r > 0.0 && r < 1.0)) {
        // Distinct points with degree outside (0,1) indicate a broken metric,
        // not a failed separation; surface it as a violation.
        ++report.checked;
        report.violations.push_back(
            {Domain::format(x) + " " + Domain::format(y) + " degenerate-degree", r, 1.0, 0.0});
        return report;
    }
    const double r0 = (r + 1.0) / 2.0;
    const double r1 =
        fn.tnorm.kind() == TNormKind::product ? std::pow(r0, 1.0 / n) : r0;
    const double ball_radius = 1.0 - r1;
    const double ball_t = t / n;

    Rng rng(spec.seed);
    for (int k = 0; k < spec.count; ++k) {
        typename Domain::Point z;
        switch (k % 3) {
        case 0: z = spec.domain.sample(rng); break;
        case 1: z = spec.domain.sample_near(x, rng); break;
        default: z = spec.domain.sample_near(y, rng); break;
        }
        ++report.checked;
        const bool in_x = ball_contains(fn, x, z, ball_radius, ball_t, BallKind::direct);
        const bool in_y = ball_contains(fn, y, z, ball_radius, ball_t, BallKind::direct);
        if (in_x && in_y)
            report.violations.push_back({Domain::format(z), r1, r0, 0.0});
    }
    return report;
}

/// Residual of the leave-one-out product identity stays below 1e-12 on
/// sampled tuples.
template <typename Domain>
AxiomReport check_subset_identity(const FuzzyNMetric<typename Domain::Point>& pair_metric,
                                  int arity, const SampleSpec<Domain>& spec) {
    spec.validate();
    AxiomReport report{"subset-identity"};
    Rng rng(spec.seed);
    const auto& grid = spec.t_grid;

    for (int k = 0; k < spec.count; ++k) {
        const auto tuple = detail::sample_tuple(spec.domain, arity, rng);
        const double t = grid[static_cast<std::size_t>(k) % grid.size()];
        const double residual = subset_identity_residual(pair_metric, tuple, t);
        ++report.checked;
        if (residual > axiom_slack)
            report.violations.push_back(
                {detail::format_tuple<Domain>(tuple), residual, 0.0, axiom_slack});
    }
    return report;
}

} // namespace fmf

#endif // FMF_AXIOM_CHECKS_HPP
