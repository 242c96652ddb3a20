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

#ifndef FMF_PIXEL_METRICS_HPP
#define FMF_PIXEL_METRICS_HPP

#include "fmf/image.hpp"

namespace fmf {

/// Minkowski distance between two pixels: (sum_l |a(l)-b(l)|^p)^(1/p).
/// p must be at least 1; p=1 and p=2 take exact fast paths.
double lp_distance(const RgbPixel& a, const RgbPixel& b, double p);

/// Stationary degree of nearness of two pixels: the product over channels of
/// (min + K)/(max + K) with smoothing constant K > 0. Agrees bit-exactly
/// with stationary_frn evaluated on the same pair of channel vectors.
double fuzzy_pixel_metric(const RgbPixel& a, const RgbPixel& b, double smoothing);

/// Three-pixel analogue: per-channel min and max range over all three
/// pixels. Agrees bit-exactly with stationary_frn on triples.
double fuzzy_triple_metric(const RgbPixel& a, const RgbPixel& b, const RgbPixel& c,
                           double smoothing);

} // namespace fmf

#endif // FMF_PIXEL_METRICS_HPP
