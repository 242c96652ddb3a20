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

#include "fmf/fuzzy_metric.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fmf {

BoundedBox::BoundedBox(double lo_, double hi_, double smoothing_, int channels_)
    : lo(lo_), hi(hi_), smoothing(smoothing_), channels(channels_) {
    if (!(hi > lo)) throw DomainError("BoundedBox: upper bound must exceed lower bound");
    if (channels < 1) throw DomainError("BoundedBox: needs at least one channel");
    if (lo < 0.0) {
        if (!(smoothing > -lo))
            throw DomainError("BoundedBox: smoothing constant must exceed |lo|");
    } else if (!(smoothing > 0.0)) {
        throw DomainError("BoundedBox: smoothing constant must be positive");
    }
}

double BoundedBox::floor_value() const {
    return std::pow((lo + smoothing) / (hi + smoothing), channels);
}

double stationary_frn(std::span<const Channels> vectors, const BoundedBox& box) {
    if (vectors.size() < 2)
        throw ArityError("stationary_frn: needs at least 2 vectors, got " +
                         std::to_string(vectors.size()));
    for (const Channels& v : vectors) {
        if (static_cast<int>(v.size()) != box.channels)
            throw DomainError("stationary_frn: vector has " + std::to_string(v.size()) +
                              " channels, box expects " + std::to_string(box.channels));
        for (double c : v)
            if (!(c >= box.lo && c <= box.hi))
                throw DomainError("stationary_frn: channel value outside the box");
    }

    double acc = 1.0;
    for (int i = 0; i < box.channels; ++i) {
        double lo = vectors[0][static_cast<std::size_t>(i)];
        double hi = lo;
        for (const Channels& v : vectors.subspan(1)) {
            lo = std::min(lo, v[static_cast<std::size_t>(i)]);
            hi = std::max(hi, v[static_cast<std::size_t>(i)]);
        }
        acc *= (lo + box.smoothing) / (hi + box.smoothing);
    }
    return acc;
}

FuzzyNMetric<Channels> make_stationary_frn(int tuple_arity, const BoundedBox& box) {
    if (tuple_arity < 2)
        throw ArityError("make_stationary_frn: tuple arity must be at least 2");
    return {tuple_arity, product_tnorm, true,
            [box](std::span<const Channels> vectors, double) {
                return stationary_frn(vectors, box);
            }};
}

} // namespace fmf
