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

#include "fmf/quality.hpp"

#include <cmath>
#include <limits>

#include "fmf/errors.hpp"
#include "fmf/text.hpp"

namespace fmf {

namespace {

void require_same_dimensions(const RgbImage& a, const RgbImage& b) {
    if (a.width() != b.width() || a.height() != b.height())
        throw DimensionMismatch("images have different dimensions");
}

double srgb_linearize(double channel) {
    return channel > 0.04045 ? std::pow((channel + 0.055) / 1.055, 2.4) : channel / 12.92;
}

double lab_f(double c) {
    constexpr double eps = 216.0 / 24389.0;
    constexpr double kappa = 24389.0 / 27.0;
    return c > eps ? std::cbrt(c) : (kappa * c + 16.0) / 116.0;
}

} // namespace

double mae(const RgbImage& reference, const RgbImage& test) {
    require_same_dimensions(reference, test);
    double acc = 0.0;
    const auto ref = reference.pixels();
    const auto tst = test.pixels();
    for (std::size_t i = 0; i < ref.size(); ++i)
        for (int l = 0; l < 3; ++l)
            acc += std::abs(static_cast<double>(ref[i][l]) - static_cast<double>(tst[i][l]));
    return acc / (static_cast<double>(ref.size()) * 3.0);
}

double psnr(const RgbImage& reference, const RgbImage& test) {
    require_same_dimensions(reference, test);
    double acc = 0.0;
    const auto ref = reference.pixels();
    const auto tst = test.pixels();
    for (std::size_t i = 0; i < ref.size(); ++i)
        for (int l = 0; l < 3; ++l) {
            const double d = static_cast<double>(ref[i][l]) - static_cast<double>(tst[i][l]);
            acc += d * d;
        }
    const double mse = acc / (static_cast<double>(ref.size()) * 3.0);
    if (mse == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(255.0 * 255.0 / mse);
}

std::array<double, 3> srgb_to_lab(const RgbPixel& pixel) {
    const double r = srgb_linearize(static_cast<double>(pixel[0]) / 255.0);
    const double g = srgb_linearize(static_cast<double>(pixel[1]) / 255.0);
    const double b = srgb_linearize(static_cast<double>(pixel[2]) / 255.0);

    const double x = r * 0.4124 + g * 0.3576 + b * 0.1805;
    const double y = r * 0.2126 + g * 0.7152 + b * 0.0722;
    const double z = r * 0.0193 + g * 0.1192 + b * 0.9505;

    const double fx = lab_f(x / 0.95047);
    const double fy = lab_f(y / 1.0);
    const double fz = lab_f(z / 1.08883);

    return {116.0 * fy - 16.0, 500.0 * (fx - fy), 200.0 * (fy - fz)};
}

double ncd(const RgbImage& reference, const RgbImage& test) {
    require_same_dimensions(reference, test);
    double num = 0.0;
    double den = 0.0;
    const auto ref = reference.pixels();
    const auto tst = test.pixels();
    for (std::size_t i = 0; i < ref.size(); ++i) {
        const auto lab_ref = srgb_to_lab(ref[i]);
        const auto lab_tst = srgb_to_lab(tst[i]);
        double diff = 0.0;
        double norm = 0.0;
        for (int l = 0; l < 3; ++l) {
            const double d = lab_ref[static_cast<std::size_t>(l)] -
                             lab_tst[static_cast<std::size_t>(l)];
            diff += d * d;
            norm += lab_ref[static_cast<std::size_t>(l)] * lab_ref[static_cast<std::size_t>(l)];
        }
        num += std::sqrt(diff);
        den += std::sqrt(norm);
    }
    if (den == 0.0)
        throw DomainError("ncd: undefined for an entirely black reference image");
    return num / den;
}

QualityReport evaluate_quality(const RgbImage& reference, const RgbImage& test) {
    return {mae(reference, test), psnr(reference, test), ncd(reference, test)};
}

std::string to_csv(const QualityReport& report) {
    return double_to_string(report.mae) + "," + double_to_string(report.psnr) + "," +
           double_to_string(report.ncd);
}

} // namespace fmf
