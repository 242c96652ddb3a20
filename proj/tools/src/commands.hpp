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

#ifndef FMF_TOOLS_COMMANDS_HPP
#define FMF_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <variant>
#include <vector>

#include "fmf/filter.hpp"
#include "fmf/noise.hpp"

namespace fmf::tools {

// Process exit codes shared by every subcommand.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_data = 2;
inline constexpr int exit_axiom_violation = 3;

struct NoiseCommand {
    std::filesystem::path input;
    std::filesystem::path output;
    NoiseSpec spec;
};

struct FilterCommand {
    std::filesystem::path input;
    std::filesystem::path output;
    FilterKind kind = FilterKind::fvmlf_scheme;
    FilterParams params;
};

struct EvalCommand {
    std::filesystem::path reference;
    std::filesystem::path test;
};

/// Noise -> filter -> eval over the smoothing x density grid; one CSV row
/// per (smoothing, density, filter) cell, always against the clean input.
struct SweepCommand {
    std::filesystem::path input;
    std::filesystem::path output_csv; ///< empty = stdout
    std::vector<double> smoothings{1024.0};
    std::vector<double> densities{0.1};
    std::vector<FilterKind> kinds{FilterKind::vmf, FilterKind::fvmf,
                                  FilterKind::fvmlf_scheme};
    ImpulseKind noise_kind = ImpulseKind::fixed_value;
    bool per_channel = false;
    std::uint64_t seed = 0;
    double p = 2.0;
    int side = 3;
    int threads = 1;
};

struct AxiomsCommand {
    std::uint64_t seed = 1;
    int samples = 1000;
};

using RunConfig =
    std::variant<NoiseCommand, FilterCommand, EvalCommand, SweepCommand, AxiomsCommand>;

/// Executes one parsed command. Writes results to `out`, one-line
/// diagnostics to `err`, and returns a process exit code. Data problems
/// (unreadable or malformed files, invalid parameter combinations surfaced
/// by the core library) map to exit_data; axiom violations found by the
/// `axioms` command map to exit_axiom_violation.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace fmf::tools

#endif // FMF_TOOLS_COMMANDS_HPP
