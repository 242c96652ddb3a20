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

#ifndef FMF_IMAGE_HPP
#define FMF_IMAGE_HPP

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "fmf/errors.hpp"

namespace fmf {

/// One RGB pixel; channels are integers in {0,...,255}. Channel values stay
/// integral until a metric evaluates them.
struct RgbPixel {
    std::array<std::uint8_t, 3> channels{};

    std::uint8_t& operator[](int i) { return channels[static_cast<std::size_t>(i)]; }
    std::uint8_t operator[](int i) const { return channels[static_cast<std::size_t>(i)]; }

    friend bool operator==(const RgbPixel&, const RgbPixel&) = default;
};

/// Row-major RGB raster.
class RgbImage {
public:
    RgbImage() = default;

    RgbImage(int width, int height, RgbPixel fill = {}) : width_(width), height_(height) {
        if (width < 1 || height < 1)
            throw DomainError("RgbImage: dimensions must be positive");
        pixels_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height),
                       fill);
    }

    int width() const { return width_; }
    int height() const { return height_; }

    RgbPixel& at(int x, int y) { return pixels_[index(x, y)]; }
    const RgbPixel& at(int x, int y) const { return pixels_[index(x, y)]; }

    std::span<const RgbPixel> pixels() const { return pixels_; }
    std::span<RgbPixel> pixels() { return pixels_; }

    friend bool operator==(const RgbImage&, const RgbImage&) = default;

private:
    std::size_t index(int x, int y) const {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
               static_cast<std::size_t>(x);
    }

    int width_ = 0;
    int height_ = 0;
    std::vector<RgbPixel> pixels_;
};

} // namespace fmf

#endif // FMF_IMAGE_HPP
