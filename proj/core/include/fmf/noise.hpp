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

#ifndef FMF_NOISE_HPP
#define FMF_NOISE_HPP

#include <cstdint>
#include <string>

#include "fmf/image.hpp"

namespace fmf {

enum class ImpulseKind {
    fixed_value,  ///< affected values jump to 0 or 255 (salt and pepper)
    random_value, ///< affected values are redrawn uniformly from {0..255}
};

ImpulseKind impulse_kind_from_string(const std::string& name);
std::string to_string(ImpulseKind kind);

/// Impulse corruption model. Each pixel is hit independently with
/// probability `density`. With per_channel set, each channel of a hit pixel
/// draws its own replacement; otherwise one draw replaces the whole pixel
/// (fixed-value: all channels 0 or all 255; random-value: one grey level
/// replicated across channels).
struct NoiseSpec {
    ImpulseKind kind = ImpulseKind::fixed_value;
    double density = 0.1;
    bool per_channel = false;
    std::uint64_t seed = 0;

    void validate() const;
};

/// Returns a corrupted copy. Randomness comes from one xoshiro256++ stream
/// consumed in row-major pixel order with a fixed draw count per pixel, so a
/// given seed hits the same pixels regardless of kind and per_channel, and
/// identical (image, spec) inputs give bit-identical outputs. Pixels that
/// are not hit are copied untouched.
RgbImage add_impulse(const RgbImage& image, const NoiseSpec& spec);

} // namespace fmf

#endif // FMF_NOISE_HPP
