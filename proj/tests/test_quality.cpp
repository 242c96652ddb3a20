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

#include <array>
#include <cmath>
#include <limits>

#include "fmf/quality.hpp"
#include "fmf/rng.hpp"
#include "support/synthetic.hpp"

using namespace fmf;
using fmf::testsupport::make_synthetic_image;

namespace {

/// Independent straight-line rendition of the same sRGB -> CIELAB
/// conversion, written without the helpers of the implementation.
std::array<double, 3> oracle_lab(const RgbPixel& px) {
    double rgb[3];
    for (int l = 0; l < 3; ++l) {
        const double c = static_cast<double>(px[l]) / 255.0;
        rgb[l] = c > 0.04045 ? std::pow((c + 0.055) / 1.055, 2.4) : c / 12.92;
    }
    const double xyz[3] = {
        (rgb[0] * 0.4124 + rgb[1] * 0.3576 + rgb[2] * 0.1805) / 0.95047,
        rgb[0] * 0.2126 + rgb[1] * 0.7152 + rgb[2] * 0.0722,
        (rgb[0] * 0.0193 + rgb[1] * 0.1192 + rgb[2] * 0.9505) / 1.08883,
    };
    double f[3];
    for (int i = 0; i < 3; ++i)
        f[i] = xyz[i] > 216.0 / 24389.0 ? std::pow(xyz[i], 1.0 / 3.0)
                                        : ((24389.0 / 27.0) * xyz[i] + 16.0) / 116.0;
    return {116.0 * f[1] - 16.0, 500.0 * (f[0] - f[1]), 200.0 * (f[1] - f[2])};
}

double oracle_ncd(const RgbImage& reference, const RgbImage& test) {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < reference.pixels().size(); ++i) {
        const auto a = oracle_lab(reference.pixels()[i]);
        const auto b = oracle_lab(test.pixels()[i]);
        num += std::sqrt((a[0] - b[0]) * (a[0] - b[0]) + (a[1] - b[1]) * (a[1] - b[1]) +
                         (a[2] - b[2]) * (a[2] - b[2]));
        den += std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
    }
    return num / den;
}

} // namespace

TEST_CASE("mae: hand values") {
    const RgbImage grey(2, 2, RgbPixel{{50, 50, 50}});
    CHECK(mae(grey, grey) == 0.0);

    const RgbImage black(3, 3, RgbPixel{{0, 0, 0}});
    const RgbImage white(3, 3, RgbPixel{{255, 255, 255}});
    CHECK(mae(black, white) == 255.0);

    RgbImage off = grey;
    off.at(1, 0)[2] = 53;
    CHECK(mae(grey, off) == doctest::Approx(0.25).epsilon(1e-15)); // 3 / 12
}

TEST_CASE("mae: symmetric in its arguments and monotone in channel error") {
    const RgbImage base = make_synthetic_image(8, 8);
    RgbImage other = base;
    other.at(3, 3) = RgbPixel{{9, 9, 9}};
    CHECK(mae(base, other) == mae(other, base));

    RgbImage worse = other;
    worse.at(5, 5)[0] = static_cast<std::uint8_t>(base.at(5, 5)[0] + 10);
    CHECK(mae(base, worse) > mae(base, other));
}

TEST_CASE("psnr: identical, forced zero, and the uniform-error value") {
    const RgbImage grey(4, 4, RgbPixel{{100, 100, 100}});
    CHECK(psnr(grey, grey) == std::numeric_limits<double>::infinity());

    const RgbImage black(4, 4, RgbPixel{{0, 0, 0}});
    const RgbImage white(4, 4, RgbPixel{{255, 255, 255}});
    CHECK(psnr(black, white) == 0.0); // MSE = 255^2

    RgbImage off_by_one(4, 4, RgbPixel{{101, 101, 101}});
    CHECK(psnr(grey, off_by_one) ==
          doctest::Approx(10.0 * std::log10(255.0 * 255.0)).epsilon(1e-12));
    CHECK(psnr(grey, off_by_one) == doctest::Approx(48.1308).epsilon(1e-4));
    CHECK(psnr(grey, off_by_one) == psnr(off_by_one, grey));
}

TEST_CASE("dimension mismatches are rejected") {
    const RgbImage a(4, 4);
    const RgbImage b(4, 5);
    CHECK_THROWS_AS(mae(a, b), DimensionMismatch);
    CHECK_THROWS_AS(psnr(a, b), DimensionMismatch);
    CHECK_THROWS_AS(ncd(a, b), DimensionMismatch);
}

TEST_CASE("ncd: zero for identical images, positive for perturbed ones") {
    const RgbImage grey(8, 8, RgbPixel{{128, 128, 128}});
    CHECK(ncd(grey, grey) == 0.0);

    RgbImage perturbed = grey;
    perturbed.at(2, 2) = RgbPixel{{132, 126, 130}};
    perturbed.at(5, 6) = RgbPixel{{120, 128, 135}};
    const double v = ncd(grey, perturbed);
    CHECK(v > 0.0);
    CHECK(v < 0.1);
    CHECK(v == doctest::Approx(oracle_ncd(grey, perturbed)).epsilon(1e-10));
}

TEST_CASE("ncd matches the independent conversion on a full test image") {
    const RgbImage reference = make_synthetic_image(16, 16);
    RgbImage test = reference;
    Rng rng(55);
    for (auto& px : test.pixels())
        if (rng.next_double() < 0.2)
            px = RgbPixel{{static_cast<std::uint8_t>(rng.next_channel()),
                           static_cast<std::uint8_t>(rng.next_channel()),
                           static_cast<std::uint8_t>(rng.next_channel())}};
    CHECK(ncd(reference, test) ==
          doctest::Approx(oracle_ncd(reference, test)).epsilon(1e-10));
}

TEST_CASE("ncd: an all-black reference is rejected explicitly") {
    const RgbImage black(4, 4, RgbPixel{{0, 0, 0}});
    const RgbImage white(4, 4, RgbPixel{{255, 255, 255}});
    CHECK_THROWS_AS(ncd(black, white), DomainError);
}

TEST_CASE("lab conversion: white, black, primary sanity") {
    const auto white = srgb_to_lab(RgbPixel{{255, 255, 255}});
    CHECK(white[0] == doctest::Approx(100.0).epsilon(1e-3));
    CHECK(white[1] == doctest::Approx(0.0).epsilon(1e-1));
    CHECK(white[2] == doctest::Approx(0.0).epsilon(1e-1));

    const auto black = srgb_to_lab(RgbPixel{{0, 0, 0}});
    CHECK(black[0] == 0.0);
    CHECK(black[1] == 0.0);
    CHECK(black[2] == 0.0);

    const auto red = srgb_to_lab(RgbPixel{{255, 0, 0}});
    CHECK(red[0] == doctest::Approx(53.24).epsilon(5e-3));
    CHECK(red[1] > 0.0);  // red side of the a* axis
    CHECK(red[2] > 0.0);  // yellow side of the b* axis
}

TEST_CASE("quality report: identity row serializes as 0,inf,0") {
    const RgbImage grey(4, 4, RgbPixel{{64, 96, 160}});
    const QualityReport report = evaluate_quality(grey, grey);
    CHECK(report.mae == 0.0);
    CHECK(report.psnr == std::numeric_limits<double>::infinity());
    CHECK(report.ncd == 0.0);
    CHECK(to_csv(report) == "0,inf,0");
}
