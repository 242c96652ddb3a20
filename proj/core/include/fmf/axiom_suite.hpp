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

#ifndef FMF_AXIOM_SUITE_HPP
#define FMF_AXIOM_SUITE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fmf/axiom_report.hpp"

namespace fmf {

/// All reports produced for one named construction.
struct SuiteEntry {
    std::string construction;
    std::vector<AxiomReport> reports;

    bool passed() const { return all_passed(reports); }
};

/// Runs every axiom and proposition check over the library's standard
/// constructions:
///
///  - the pairwise-difference metric and the sum/max metrics built from
///    |x-y| on reals in [0,10], arities 3..5;
///  - the t/(t+G) fuzzy metrics induced by those, arities 3..5;
///  - the pairwise-product fuzzy metric over the standard t/(t+|x-y|)
///    metric, arities 3..5, including the leave-one-out subset identity,
///    ball containment and two-ball separation;
///  - the stationary min/max ratio metric on the RGB cube with smoothing
///    1024, tuple arities 2 and 3, including its uniform lower bound
///    (1024/1279)^3.
///
/// Deterministic given (seed, samples).
std::vector<SuiteEntry> run_standard_axiom_suite(std::uint64_t seed, int samples);

bool all_passed(const std::vector<SuiteEntry>& entries);

} // namespace fmf

#endif // FMF_AXIOM_SUITE_HPP
