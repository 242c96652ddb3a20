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

#include "fmf/axiom_report.hpp"

#include "fmf/text.hpp"

namespace fmf {

std::string to_tsv(const AxiomReport& report) {
    std::string out = report.axiom_id;
    out += '\t';
    out += std::to_string(report.checked);
    out += '\t';
    out += std::to_string(report.violations.size());
    out += '\n';
    for (const AxiomViolation& v : report.violations) {
        out += "!\t";
        out += v.inputs;
        out += '\t';
        out += double_to_string(v.lhs);
        out += '\t';
        out += double_to_string(v.rhs);
        out += '\t';
        out += double_to_string(v.slack);
        out += '\n';
    }
    return out;
}

std::string to_tsv(std::span<const AxiomReport> reports) {
    std::string out;
    for (const AxiomReport& r : reports) out += to_tsv(r);
    return out;
}

bool all_passed(std::span<const AxiomReport> reports) {
    for (const AxiomReport& r : reports)
        if (!r.passed()) return false;
    return true;
}

} // namespace fmf
