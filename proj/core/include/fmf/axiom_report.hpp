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

#ifndef FMF_AXIOM_REPORT_HPP
#define FMF_AXIOM_REPORT_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace fmf {

/// One sampled counterexample: the formatted inputs plus the two compared
/// values and the slack the comparison allowed.
struct AxiomViolation {
    std::string inputs;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
};

/// Result of sampling one axiom or proposition. A report passes exactly when
/// it records no violations.
struct AxiomReport {
    AxiomReport() = default;
    explicit AxiomReport(std::string id) : axiom_id(std::move(id)) {}
    AxiomReport(std::string id, std::int64_t checked_count,
                std::vector<AxiomViolation> violation_list)
        : axiom_id(std::move(id)),
          checked(checked_count),
          violations(std::move(violation_list)) {}

    std::string axiom_id;
    std::int64_t checked = 0;
    std::vector<AxiomViolation> violations;

    bool passed() const { return violations.empty(); }
};

/// Line-oriented serialization: `axiom_id<TAB>checked<TAB>violation_count`,
/// then one `!<TAB>inputs<TAB>lhs<TAB>rhs<TAB>slack` line per violation.
/// Deterministic given the report contents.
std::string to_tsv(const AxiomReport& report);
std::string to_tsv(std::span<const AxiomReport> reports);

bool all_passed(std::span<const AxiomReport> reports);

} // namespace fmf

#endif // FMF_AXIOM_REPORT_HPP
