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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "fmf/fuzzy_metric.hpp"
#include "fmf/generalized_metric.hpp"
#include "fmf/rng.hpp"
#include "fmf/tnorm.hpp"

using namespace fmf;

namespace {

double abs_diff(const double& a, const double& b) { return std::abs(a - b); }

// Straightforward independent evaluation of the pairwise-difference sum, no
// sorting, used as the oracle for the canonical implementation.
double naive_pair_sum(const std::vector<double>& xs) {
    double acc = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j) acc += std::abs(xs[i] - xs[j]);
    return acc;
}

std::vector<double> random_tuple(Rng& rng, int n, double lo = 0.0, double hi = 10.0) {
    std::vector<double> xs;
    xs.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) xs.push_back(lo + rng.next_double() * (hi - lo));
    return xs;
}

} // namespace

TEST_CASE("t-norms: arithmetic and identity") {
    CHECK(product_tnorm.apply(0.5, 1.0) == 0.5);
    CHECK(product_tnorm.apply(0.5, 0.5) == 0.25);
    CHECK(minimum_tnorm.apply(0.3, 0.7) == 0.3);
    CHECK(minimum_tnorm.apply(0.3, 1.0) == 0.3);
    CHECK(tnorm_apply(product_tnorm, 0.25, 0.5) == 0.125);
}

TEST_CASE("t-norms: operands outside [0,1] rejected") {
    CHECK_THROWS_AS(product_tnorm.apply(-0.1, 0.5), DomainError);
    CHECK_THROWS_AS(product_tnorm.apply(0.5, 1.1), DomainError);
    CHECK_THROWS_AS(minimum_tnorm.apply(2.0, 0.0), DomainError);
}

TEST_CASE("t-norms: commutative, associative, monotone on a grid") {
    const std::vector<double> grid{0.0, 0.1, 0.3, 0.5, 0.9, 1.0};
    for (const TNorm& tn : {product_tnorm, minimum_tnorm}) {
        for (double a : grid)
            for (double b : grid) {
                CHECK(tn.apply(a, b) == tn.apply(b, a));
                CHECK(tn.apply(a, 1.0) == a);
                for (double c : grid) {
                    CHECK(tn.apply(tn.apply(a, b), c) ==
                          doctest::Approx(tn.apply(a, tn.apply(b, c))).epsilon(1e-15));
                    if (a <= c)
                        CHECK(tn.apply(a, b) <= tn.apply(c, b));
                }
            }
    }
}

TEST_CASE("gn_rho: hand values and coincidence") {
    const std::vector<double> zeros{0.0, 0.0, 0.0};
    CHECK(gn_rho(zeros) == 0.0);
    const std::vector<double> xs{0.0, 1.0, 2.0};
    CHECK(gn_rho(xs) == 4.0); // |0-1| + |0-2| + |1-2|
    const std::vector<double> reversed{2.0, 1.0, 0.0};
    CHECK(gn_rho(reversed) == 4.0);
}

TEST_CASE("gn_rho: fewer than three points rejected") {
    const std::vector<double> two{0.0, 1.0};
    CHECK_THROWS_AS(gn_rho(two), ArityError);
    CHECK_THROWS_AS(make_gn_rho(2), ArityError);
}

TEST_CASE("gn_rho: permutation invariance is bit-exact") {
    Rng rng(7);
    for (int it = 0; it < 200; ++it) {
        auto xs = random_tuple(rng, 3 + static_cast<int>(rng.next_below(3)));
        const double base = gn_rho(xs);
        for (std::size_t i = xs.size(); i > 1; --i)
            std::swap(xs[i - 1], xs[rng.next_below(i)]);
        CHECK(gn_rho(xs) == base);
    }
}

TEST_CASE("gn_rho matches the naive pairwise sum") {
    Rng rng(11);
    for (int it = 0; it < 200; ++it) {
        const auto xs = random_tuple(rng, 3 + static_cast<int>(rng.next_below(3)));
        CHECK(gn_rho(xs) == doctest::Approx(naive_pair_sum(xs)).epsilon(1e-13));
    }
}

TEST_CASE("gn_from_metric: sum mode equals gn_rho on reals") {
    Rng rng(13);
    for (int it = 0; it < 100; ++it) {
        const auto xs = random_tuple(rng, 4);
        CHECK(gn_from_metric<double>(xs, abs_diff, GnCombine::sum) == gn_rho(xs));
    }
}

TEST_CASE("gn_from_metric: max mode") {
    const std::vector<double> xs{0.0, 1.0, 5.0};
    CHECK(gn_from_metric<double>(xs, abs_diff, GnCombine::max) == 5.0);
    const std::vector<double> same{3.0, 3.0, 3.0};
    CHECK(gn_from_metric<double>(same, abs_diff, GnCombine::max) == 0.0);
    const std::vector<double> two{0.0, 1.0};
    CHECK_THROWS_AS(gn_from_metric<double>(two, abs_diff, GnCombine::max), ArityError);
}

TEST_CASE("std_fuzzy_metric: hand values and domain errors") {
    CHECK(std_fuzzy_metric<double>(abs_diff, 5.0, 5.0, 1.0) == 1.0);
    CHECK(std_fuzzy_metric<double>(abs_diff, 0.0, 3.0, 1.0) == 0.25);
    CHECK(std_fuzzy_metric<double>(abs_diff, 0.0, 3.0, 3.0) == 0.5);
    CHECK_THROWS_AS(std_fuzzy_metric<double>(abs_diff, 0.0, 3.0, 0.0), DomainError);
    CHECK_THROWS_AS(std_fuzzy_metric<double>(abs_diff, 0.0, 3.0, -1.0), DomainError);
}

TEST_CASE("fuzzy_from_gn: hand values, large-t limit, arity") {
    const auto gn = make_gn_rho(3);
    const std::vector<double> zeros{0.0, 0.0, 0.0};
    CHECK(fuzzy_from_gn(gn, zeros, 7.0) == 1.0);
    const std::vector<double> xs{0.0, 1.0, 2.0};
    CHECK(fuzzy_from_gn(gn, xs, 4.0) == 0.5); // 4/(4 + 4)
    CHECK(fuzzy_from_gn(gn, xs, 1e9) > 1.0 - 1e-3);
    CHECK_THROWS_AS(fuzzy_from_gn(gn, xs, 0.0), DomainError);
    const std::vector<double> four{0.0, 1.0, 2.0, 3.0};
    CHECK_THROWS_AS(fuzzy_from_gn(gn, four, 1.0), ArityError);
}

TEST_CASE("product_construction: hand values") {
    const auto pair = make_standard_fuzzy_metric<double>(abs_diff);
    const std::vector<double> zeros{0.0, 0.0, 0.0};
    CHECK(product_construction(pair, zeros, 1.0) == 1.0);
    const std::vector<double> xs{0.0, 1.0, 2.0};
    // (1/2)(1/3)(1/2)
    CHECK(product_construction(pair, xs, 1.0) == doctest::Approx(1.0 / 12.0).epsilon(1e-15));
}

TEST_CASE("product_construction: rejects minimum t-norm and short tuples") {
    auto pair = make_standard_fuzzy_metric<double>(abs_diff);
    pair.tnorm = minimum_tnorm;
    const std::vector<double> xs{0.0, 1.0, 2.0};
    CHECK_THROWS_AS(product_construction(pair, xs, 1.0), UnsupportedConstruction);
    CHECK_THROWS_AS(make_product_metric(pair, 3), UnsupportedConstruction);

    const auto good = make_standard_fuzzy_metric<double>(abs_diff);
    const std::vector<double> two{0.0, 1.0};
    CHECK_THROWS_AS(product_construction(good, two, 1.0), ArityError);
}

TEST_CASE("product_construction: permutation invariance is bit-exact") {
    const auto pair = make_standard_fuzzy_metric<double>(abs_diff);
    Rng rng(17);
    for (int it = 0; it < 200; ++it) {
        auto xs = random_tuple(rng, 3 + static_cast<int>(rng.next_below(3)));
        const double base = product_construction(pair, xs, 2.0);
        for (std::size_t i = xs.size(); i > 1; --i)
            std::swap(xs[i - 1], xs[rng.next_below(i)]);
        CHECK(product_construction(pair, xs, 2.0) == base);
    }
}

TEST_CASE("subset identity: three points, both sides computed directly") {
    const auto pair = make_standard_fuzzy_metric<double>(abs_diff);
    const std::vector<double> xs{0.0, 1.0, 2.0};
    // full product over the three pairs
    const double full = (1.0 / 2.0) * (1.0 / 3.0) * (1.0 / 2.0);
    // product over the three leave-one-out pairs: the same three factors
    const double subsets = (1.0 / 2.0) * (1.0 / 3.0) * (1.0 / 2.0);
    CHECK(std::abs(full - subsets) == 0.0);
    CHECK(subset_identity_residual(pair, xs, 1.0) <= 1e-12);
}

TEST_CASE("subset identity: equal points give zero exactly") {
    const auto pair = make_standard_fuzzy_metric<double>(abs_diff);
    const std::vector<double> xs{4.0, 4.0, 4.0, 4.0};
    CHECK(subset_identity_residual(pair, xs, 1.0) == 0.0);
}

TEST_CASE("subset identity: random tuples stay within 1e-12") {
    const auto pair = make_standard_fuzzy_metric<double>(abs_diff);
    Rng rng(19);
    for (int n : {3, 4, 5}) {
        for (int it = 0; it < 200; ++it) {
            const auto xs = random_tuple(rng, n);
            CHECK(subset_identity_residual(pair, xs, 2.0) <= 1e-12);
        }
    }
}

TEST_CASE("BoundedBox: validation and floor value") {
    const BoundedBox rgb{0.0, 255.0, 1024.0, 3};
    const double c = 1024.0 / 1279.0;
    CHECK(rgb.floor_value() == doctest::Approx(c * c * c).epsilon(1e-15));
    CHECK(rgb.floor_value() > 0.0);
    CHECK(rgb.floor_value() < 1.0);

    CHECK_THROWS_AS(BoundedBox(5.0, 5.0, 10.0, 3), DomainError);   // empty interval
    CHECK_THROWS_AS(BoundedBox(0.0, 255.0, 0.0, 3), DomainError);  // K = 0
    CHECK_THROWS_AS(BoundedBox(0.0, 255.0, -1.0, 3), DomainError); // K < 0
    CHECK_THROWS_AS(BoundedBox(-5.0, 5.0, 3.0, 3), DomainError);   // K <= |lo|
    CHECK_NOTHROW(BoundedBox(-5.0, 5.0, 6.0, 3));
    CHECK_NOTHROW(BoundedBox(0.0, 255.0, 0.5, 3)); // any K > 0 once lo >= 0
}

TEST_CASE("stationary_frn: coincidence and the black/white extreme") {
    const BoundedBox box{0.0, 255.0, 1024.0, 3};
    const Channels grey{128.0, 128.0, 128.0};
    const std::vector<Channels> same{grey, grey, grey};
    CHECK(stationary_frn(same, box) == 1.0);

    const std::vector<Channels> extremes{{0.0, 0.0, 0.0}, {255.0, 255.0, 255.0}};
    const double c = 1024.0 / 1279.0;
    CHECK(stationary_frn(extremes, box) == c * c * c);
    CHECK(stationary_frn(extremes, box) == doctest::Approx(0.5132).epsilon(1e-4));
}

TEST_CASE("stationary_frn: the floor bound holds on random samples") {
    const BoundedBox box{0.0, 255.0, 1024.0, 3};
    const double floor = box.floor_value();
    Rng rng(23);
    for (int it = 0; it < 500; ++it) {
        std::vector<Channels> vectors;
        const int r = 2 + static_cast<int>(rng.next_below(3));
        for (int j = 0; j < r; ++j)
            vectors.push_back({static_cast<double>(rng.next_channel()),
                               static_cast<double>(rng.next_channel()),
                               static_cast<double>(rng.next_channel())});
        const double v = stationary_frn(vectors, box);
        CHECK(v >= floor);
        CHECK(v <= 1.0);
    }
}

TEST_CASE("stationary_frn: domain and arity errors") {
    const BoundedBox box{0.0, 255.0, 1024.0, 3};
    const std::vector<Channels> out_of_box{{0.0, 0.0, 0.0}, {256.0, 0.0, 0.0}};
    CHECK_THROWS_AS(stationary_frn(out_of_box, box), DomainError);
    const std::vector<Channels> short_vector{{0.0, 0.0}, {1.0, 1.0}};
    CHECK_THROWS_AS(stationary_frn(short_vector, box), DomainError);
    const std::vector<Channels> lone{{0.0, 0.0, 0.0}};
    CHECK_THROWS_AS(stationary_frn(lone, box), ArityError);
    CHECK_THROWS_AS(make_stationary_frn(1, box), ArityError);
}

TEST_CASE("stationary_frn: the t argument is ignored") {
    const auto fn = make_stationary_frn(3, BoundedBox{0.0, 255.0, 1024.0, 3});
    const std::vector<Channels> vectors{{0.0, 10.0, 20.0}, {5.0, 5.0, 5.0}, {200.0, 1.0, 3.0}};
    CHECK(fn.stationary);
    CHECK(fn.evaluate(vectors, 0.25) == fn.evaluate(vectors, 1000.0));
}

TEST_CASE("induced_pairwise: coincidence, hand value and symmetry") {
    const auto fn = make_stationary_frn(3, BoundedBox{0.0, 255.0, 1024.0, 3});
    const Channels black{0.0, 0.0, 0.0};
    const Channels white{255.0, 255.0, 255.0};
    CHECK(induced_pairwise(fn, black, black, 1.0) == 1.0);

    const double c = 1024.0 / 1279.0;
    const double cubed = c * c * c;
    CHECK(induced_pairwise(fn, black, white, 1.0) == cubed * cubed);
    CHECK(induced_pairwise(fn, black, white, 1.0) ==
          induced_pairwise(fn, white, black, 1.0));
    CHECK_THROWS_AS(induced_pairwise(fn, black, white, 0.0), DomainError);
}

TEST_CASE("power inequality holds for the standard constructions") {
    Rng rng(29);
    const auto fn = make_fuzzy_from_gn(make_gn_rho(4));
    for (int it = 0; it < 300; ++it) {
        const double x = rng.next_double() * 10.0;
        const double y = rng.next_double() * 10.0;
        const double t = 0.5 + rng.next_double() * 4.0;
        const std::vector<double> xyy{x, y, y, y};
        const std::vector<double> yxx{y, x, x, x};
        const double lhs = fn.evaluate(xyy, t);
        const double rhs = std::pow(fn.evaluate(yxx, t / 3.0), 3.0);
        CHECK(lhs >= rhs - 1e-12);
    }
}

TEST_CASE("nondecreasing in t for the induced construction") {
    const auto fn = make_fuzzy_from_gn(make_gn_rho(3));
    const std::vector<double> xs{0.0, 1.0, 2.0};
    double prev = 0.0;
    for (double t : {0.5, 1.0, 2.0, 4.0, 8.0, 16.0}) {
        const double cur = fn.evaluate(xs, t);
        CHECK(cur >= prev);
        prev = cur;
    }
    // strictly increasing while the distance term is positive
    CHECK(fn.evaluate(xs, 1.0) < fn.evaluate(xs, 2.0));
}
