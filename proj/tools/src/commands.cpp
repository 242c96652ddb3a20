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

#include "commands.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "fmf/axiom_suite.hpp"
#include "fmf/quality.hpp"
#include "fmf/text.hpp"
#include "ppm.hpp"

namespace fmf::tools {

namespace {

int run_noise(const NoiseCommand& cmd, std::ostream&) {
    const RgbImage input = read_ppm(cmd.input);
    write_ppm(cmd.output, add_impulse(input, cmd.spec));
    return exit_ok;
}

int run_filter(const FilterCommand& cmd, std::ostream&) {
    const RgbImage input = read_ppm(cmd.input);
    write_ppm(cmd.output, filter_image(input, cmd.kind, cmd.params));
    return exit_ok;
}

int run_eval(const EvalCommand& cmd, std::ostream& out) {
    const RgbImage reference = read_ppm(cmd.reference);
    const RgbImage test = read_ppm(cmd.test);
    out << "mae,psnr,ncd\n" << to_csv(evaluate_quality(reference, test)) << "\n";
    return exit_ok;
}

std::string sweep_csv(const SweepCommand& cmd, const RgbImage& input) {
    std::string csv = "K,density,filter,mae,psnr,ncd\n";
    for (const double smoothing : cmd.smoothings) {
        for (const double density : cmd.densities) {
            NoiseSpec noise{cmd.noise_kind, density, cmd.per_channel, cmd.seed};
            const RgbImage noisy = add_impulse(input, noise);
            for (const FilterKind kind : cmd.kinds) {
                FilterParams params;
                params.p = cmd.p;
                params.smoothing = smoothing;
                params.side = cmd.side;
                params.threads = cmd.threads;
                const RgbImage filtered = filter_image(noisy, kind, params);
                csv += double_to_string(smoothing) + "," + double_to_string(density) + "," +
                       to_string(kind) + "," + to_csv(evaluate_quality(input, filtered)) +
                       "\n";
            }
        }
    }
    return csv;
}

int run_sweep(const SweepCommand& cmd, std::ostream& out) {
    const RgbImage input = read_ppm(cmd.input);
    const std::string csv = sweep_csv(cmd, input);
    if (cmd.output_csv.empty()) {
        out << csv;
        return exit_ok;
    }
    std::ofstream file(cmd.output_csv, std::ios::binary | std::ios::trunc);
    if (!file) throw PpmError("cannot open '" + cmd.output_csv.string() + "' for writing");
    file << csv;
    if (!file) throw PpmError("failed writing '" + cmd.output_csv.string() + "'");
    return exit_ok;
}

int run_axioms(const AxiomsCommand& cmd, std::ostream& out) {
    const auto entries = run_standard_axiom_suite(cmd.seed, cmd.samples);
    for (const SuiteEntry& entry : entries) {
        out << "# " << entry.construction << "\n";
        out << to_tsv(entry.reports);
    }
    return all_passed(entries) ? exit_ok : exit_axiom_violation;
}

} // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        return std::visit(
            [&out](const auto& cmd) -> int {
                using T = std::decay_t<decltype(cmd)>;
                if constexpr (std::is_same_v<T, NoiseCommand>) {
                    return run_noise(cmd, out);
                } else if constexpr (std::is_same_v<T, FilterCommand>) {
                    return run_filter(cmd, out);
                } else if constexpr (std::is_same_v<T, EvalCommand>) {
                    return run_eval(cmd, out);
                } else if constexpr (std::is_same_v<T, SweepCommand>) {
                    return run_sweep(cmd, out);
                } else {
                    return run_axioms(cmd, out);
                }
            },
            config);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_data;
    }
}

} // namespace fmf::tools
