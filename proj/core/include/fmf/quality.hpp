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

#ifndef FMF_QUALITY_HPP
#define FMF_QUALITY_HPP

#include <array>
#include <string>

#include "fmf/image.hpp"

namespace fmf {

/// Mean absolute channel error over all pixels.
double mae(const RgbImage& reference, const RgbImage& test);

/// 10*log10(255^2 / MSE) in dB, with MSE the mean squared channel error.
/// Identical images yield +infinity.
double psnr(const RgbImage& reference, const RgbImage& test);

/// CIELAB coordinates (L*, a*, b*) of one sRGB pixel.
///
/// Conversion pinned as: channel/255, sRGB linearization (threshold 0.04045,
/// divisor 12.92, gamma 2.4 with offset 0.055), linear RGB -> XYZ through
/// the D65 matrix rows (0.4124,0.3576,0.1805 / 0.2126,0.7152,0.0722 /
/// 0.0193,0.1192,0.9505), normalization by the D65 white point
/// (0.95047, 1.0, 1.08883), then f(c) = cbrt(c) for c > 216/24389 and
/// (24389/27 * c + 16)/116 otherwise, L* = 116 f(y) - 16,
/// a* = 500 (f(x) - f(y)), b* = 200 (f(y) - f(z)).
std::array<double, 3> srgb_to_lab(const RgbPixel& pixel);

/// Normalized colour difference: the sum over pixels of the Euclidean
/// CIELAB distance between reference and test, divided by the sum of the
/// Euclidean CIELAB norms of the reference pixels. Throws DomainError when
/// the reference is entirely black (zero denominator).
double ncd(const RgbImage& reference, const RgbImage& test);

struct QualityReport {
    double mae = 0.0;
    double psnr = 0.0;
    double ncd = 0.0;
};

QualityReport evaluate_quality(const RgbImage& reference, const RgbImage& test);

/// CSV row `mae,psnr,ncd`, infinity rendered as `inf`.
std::string to_csv(const QualityReport& report);

} // namespace fmf

#endif // FMF_QUALITY_HPP
