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

#include "fmf/pixel_metrics.hpp"

#include <algorithm>
#include <cmath>

#include "fmf/errors.hpp"

namespace fmf {

double lp_distance(const RgbPixel& a, const RgbPixel& b, double p) {
    if (!(p >= 1.0)) throw DomainError("lp_distance: p must be at least 1");
    double d0 = std::abs(static_cast<double>(a[0]) - static_cast<double>(b[0]));
    double d1 = std::abs(static_cast<double>(a[1]) - static_cast<double>(b[1]));
    double d2 = std::abs(static_cast<double>(a[2]) - static_cast<double>(b[2]));
    if (p == 1.0) return d0 + d1 + d2;
    if (p == 2.0) return std::sqrt(d0 * d0 + d1 * d1 + d2 * d2);
    return std::pow(std::pow(d0, p) + std::pow(d1, p) + std::pow(d2, p), 1.0 / p);
}

namespace {

void require_smoothing(double smoothing) {
    if (!(smoothing > 0.0))
        throw DomainError("fuzzy pixel metric: smoothing constant must be positive");
}

} // namespace

double fuzzy_pixel_metric(const RgbPixel& a, const RgbPixel& b, double smoothing) {
    require_smoothing(smoothing);
    double acc = 1.0;
    for (int l = 0; l < 3; ++l) {
        const double lo = static_cast<double>(std::min(a[l], b[l]));
        const double hi = static_cast<double>(std::max(a[l], b[l]));
        acc *= (lo + smoothing) / (hi + smoothing);
    }
    return acc;
}

double fuzzy_triple_metric(const RgbPixel& a, const RgbPixel& b, const RgbPixel& c,
                           double smoothing) {
    require_smoothing(smoothing);
    double acc = 1.0;
    for (int l = 0; l < 3; ++l) {
        const double lo = static_cast<double>(std::min({a[l], b[l], c[l]}));
        const double hi = static_cast<double>(std::max({a[l], b[l], c[l]}));
        acc *= (lo + smoothing) / (hi + smoothing);
    }
    return acc;
}

} // namespace fmf
