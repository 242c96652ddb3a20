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

#include "ppm.hpp"

#include <fstream>
#include <string>

namespace fmf::tools {

std::vector<std::uint8_t> encode_ppm(const RgbImage& image) {
    const std::string header = "P6\n" + std::to_string(image.width()) + " " +
                               std::to_string(image.height()) + "\n255\n";
    std::vector<std::uint8_t> bytes(header.begin(), header.end());
    bytes.reserve(bytes.size() + image.pixels().size() * 3);
    for (const RgbPixel& px : image.pixels())
        for (int l = 0; l < 3; ++l) bytes.push_back(px[l]);
    return bytes;
}

namespace {

class HeaderScanner {
public:
    explicit HeaderScanner(const std::vector<std::uint8_t>& bytes) : bytes_(bytes) {}

    /// Next whitespace-delimited token, skipping `#` comments.
    std::string next_token() {
        skip_separators();
        std::string token;
        while (pos_ < bytes_.size() && !is_space(bytes_[pos_]))
            token.push_back(static_cast<char>(bytes_[pos_++]));
        if (token.empty()) throw PpmError("truncated PPM header");
        return token;
    }

    /// The single whitespace byte after the maxval, then raster data begins.
    std::size_t raster_offset() {
        if (pos_ >= bytes_.size() || !is_space(bytes_[pos_]))
            throw PpmError("missing separator before PPM raster data");
        return pos_ + 1;
    }

private:
    static bool is_space(std::uint8_t c) {
        return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
    }

    void skip_separators() {
        while (pos_ < bytes_.size()) {
            if (is_space(bytes_[pos_])) {
                ++pos_;
            } else if (bytes_[pos_] == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    const std::vector<std::uint8_t>& bytes_;
    std::size_t pos_ = 0;
};

int parse_positive_int(const std::string& token, const char* what) {
    try {
        std::size_t used = 0;
        const int value = std::stoi(token, &used);
        if (used != token.size() || value < 1) throw PpmError("");
        return value;
    } catch (const std::exception&) {
        throw PpmError(std::string("invalid PPM ") + what + ": '" + token + "'");
    }
}

} // namespace

RgbImage decode_ppm(const std::vector<std::uint8_t>& bytes) {
    HeaderScanner scanner(bytes);
    if (scanner.next_token() != "P6") throw PpmError("not a binary PPM (P6) file");
    const int width = parse_positive_int(scanner.next_token(), "width");
    const int height = parse_positive_int(scanner.next_token(), "height");
    const int maxval = parse_positive_int(scanner.next_token(), "maxval");
    if (maxval != 255) throw PpmError("unsupported PPM maxval (must be 255)");

    const std::size_t offset = scanner.raster_offset();
    const std::size_t expected =
        static_cast<std::size_t>(width) * static_cast<std::size_t>(height) * 3;
    if (bytes.size() - offset < expected) throw PpmError("truncated PPM raster data");

    RgbImage image(width, height);
    std::size_t pos = offset;
    for (RgbPixel& px : image.pixels())
        for (int l = 0; l < 3; ++l) px[l] = bytes[pos++];
    return image;
}

RgbImage read_ppm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw PpmError("cannot open '" + path.string() + "' for reading");
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return decode_ppm(bytes);
}

void write_ppm(const std::filesystem::path& path, const RgbImage& image) {
    const auto bytes = encode_ppm(image);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw PpmError("cannot open '" + path.string() + "' for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw PpmError("failed writing '" + path.string() + "'");
}

} // namespace fmf::tools
