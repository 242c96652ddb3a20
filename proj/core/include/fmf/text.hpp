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

#ifndef FMF_TEXT_HPP
#define FMF_TEXT_HPP

#include <string>

namespace fmf {

/// Locale-independent shortest round-trip decimal rendering of a double.
/// Infinities render as "inf"/"-inf". Used everywhere values end up in
/// reports or CSV so output is byte-reproducible.
std::string double_to_string(double value);

} // namespace fmf

#endif // FMF_TEXT_HPP
