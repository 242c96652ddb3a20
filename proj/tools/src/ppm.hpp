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

#ifndef FMF_TOOLS_PPM_HPP
#define FMF_TOOLS_PPM_HPP

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <vector>

#include "fmf/image.hpp"

namespace fmf::tools {

/// Malformed or unreadable image file.
class PpmError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact byte layout written for an image: `P6\n<w> <h>\n255\n` followed by
/// interleaved RGB bytes in row-major order.
std::vector<std::uint8_t> encode_ppm(const RgbImage& image);

/// Parses binary PPM (P6, maxval 255). Accepts `#` comments and arbitrary
/// whitespace in the header, per the format definition.
RgbImage decode_ppm(const std::vector<std::uint8_t>& bytes);

RgbImage read_ppm(const std::filesystem::path& path);
void write_ppm(const std::filesystem::path& path, const RgbImage& image);

} // namespace fmf::tools

#endif // FMF_TOOLS_PPM_HPP
