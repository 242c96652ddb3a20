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

#include "fmf/noise.hpp"

#include "fmf/errors.hpp"
#include "fmf/rng.hpp"

namespace fmf {

ImpulseKind impulse_kind_from_string(const std::string& name) {
    if (name == "fixed-value") return ImpulseKind::fixed_value;
    if (name == "random-value") return ImpulseKind::random_value;
    throw DomainError("unknown impulse kind: " + name);
}

std::string to_string(ImpulseKind kind) {
    return kind == ImpulseKind::fixed_value ? "fixed-value" : "random-value";
}

void NoiseSpec::validate() const {
    if (!(density >= 0.0 && density <= 1.0))
        throw DomainError("NoiseSpec: density must lie in [0,1]");
}

namespace {

std::uint8_t fixed_value_from(std::uint64_t raw) { return (raw & 1) ? 255 : 0; }
std::uint8_t random_value_from(std::uint64_t raw) { return static_cast<std::uint8_t>(raw & 0xFF); }

} // namespace

RgbImage add_impulse(const RgbImage& image, const NoiseSpec& spec) {
    spec.validate();
    RgbImage out = image;
    Rng rng(spec.seed);

    // Exactly four draws per pixel: one hit decision plus one raw word per
    // channel. The fixed layout keeps the hit pattern identical across kinds
    // and the per_channel toggle.
    for (RgbPixel& pixel : out.pixels()) {
        const double u = rng.next_double();
        std::uint64_t raw[3];
        for (auto& word : raw) word = rng.next_u64();
        if (u >= spec.density) continue;

        if (spec.kind == ImpulseKind::fixed_value) {
            if (spec.per_channel) {
                for (int l = 0; l < 3; ++l) pixel[l] = fixed_value_from(raw[l]);
            } else {
                const std::uint8_t v = fixed_value_from(raw[0]);
                pixel = RgbPixel{{v, v, v}};
            }
        } else {
            if (spec.per_channel) {
                for (int l = 0; l < 3; ++l) pixel[l] = random_value_from(raw[l]);
            } else {
                const std::uint8_t v = random_value_from(raw[0]);
                pixel = RgbPixel{{v, v, v}};
            }
        }
    }
    return out;
}

} // namespace fmf
