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

#ifndef FMF_SAMPLE_DOMAINS_HPP
#define FMF_SAMPLE_DOMAINS_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "fmf/errors.hpp"
#include "fmf/fuzzy_metric.hpp"
#include "fmf/rng.hpp"
#include "fmf/text.hpp"

namespace fmf {

/// Closed real interval [lo,hi] sampled uniformly.
struct RealInterval {
    using Point = double;

    double lo = 0.0;
    double hi = 10.0;

    Point sample(Rng& rng) const { return lo + rng.next_double() * (hi - lo); }

    /// Point near x: x nudged by up to 1% of the interval width, clamped.
    Point sample_near(const Point& x, Rng& rng) const {
        const double delta = (rng.next_double() - 0.5) * 0.02 * (hi - lo);
        return std::clamp(x + delta, lo, hi);
    }

    static std::string format(const Point& x) { return double_to_string(x); }
};

/// RGB cube {0,...,255}^3 sampled as integer-valued channel vectors.
struct RgbCube {
    using Point = Channels;

    Point sample(Rng& rng) const {
        return {static_cast<double>(rng.next_channel()),
                static_cast<double>(rng.next_channel()),
                static_cast<double>(rng.next_channel())};
    }

    /// Point near x: each channel nudged by an integer step in [-2,2],
    /// clamped to the cube.
    Point sample_near(const Point& x, Rng& rng) const {
        Point out = x;
        for (double& c : out) {
            const double step = static_cast<double>(rng.next_below(5)) - 2.0;
            c = std::clamp(c + step, 0.0, 255.0);
        }
        return out;
    }

    static std::string format(const Point& p) {
        std::string out = "(";
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i) out += ',';
            out += double_to_string(p[i]);
        }
        out += ')';
        return out;
    }
};

/// How many tuples to draw, from where, and with which time parameters.
/// Identical specs always produce identical reports.
template <typename Domain>
struct SampleSpec {
    Domain domain{};
    int tuple_arity = 3;
    int count = 1000;
    std::uint64_t seed = 1;
    std::vector<double> t_grid{0.25, 0.5, 1.0, 2.0, 4.0, 8.0};

    void validate() const {
        if (count < 1) throw DomainError("SampleSpec: count must be at least 1");
        if (t_grid.empty()) throw DomainError("SampleSpec: t_grid must not be empty");
        double prev = 0.0;
        for (double t : t_grid) {
            if (!(t > prev))
                throw DomainError("SampleSpec: t_grid must be strictly positive and increasing");
            prev = t;
        }
    }
};

} // namespace fmf

#endif // FMF_SAMPLE_DOMAINS_HPP
