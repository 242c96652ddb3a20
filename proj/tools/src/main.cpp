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

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using namespace fmf;
using namespace fmf::tools;

std::vector<FilterKind> parse_filter_list(const std::vector<std::string>& names) {
    std::vector<FilterKind> kinds;
    kinds.reserve(names.size());
    for (const auto& name : names) kinds.push_back(filter_kind_from_string(name));
    return kinds;
}

const CLI::Validator odd_window(
    [](std::string& value) -> std::string {
        try {
            if (std::stoi(value) % 2 == 0) return "window side must be odd";
        } catch (const std::exception&) {
            return "window side must be an integer";
        }
        return {};
    },
    "ODD");

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Colour-image impulse noise tools built on generalized fuzzy metrics.\n"
        "Images are binary PPM (P6, maxval 255). All randomness is drawn from\n"
        "a seeded xoshiro256++ generator (splitmix64 seeding), so identical\n"
        "flags and inputs reproduce outputs byte for byte."};
    app.require_subcommand(1);

    std::optional<RunConfig> config;

    // noise
    auto* noise = app.add_subcommand("noise", "Corrupt an image with impulse noise");
    auto noise_cmd = std::make_shared<NoiseCommand>();
    std::string noise_kind = "fixed-value";
    noise->add_option("--kind", noise_kind, "Impulse model: fixed-value or random-value")
        ->check(CLI::IsMember({"fixed-value", "random-value"}))
        ->capture_default_str();
    noise->add_option("--density", noise_cmd->spec.density, "Corruption probability in [0,1]")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    noise->add_flag("--per-channel", noise_cmd->spec.per_channel,
                    "Draw each channel of a hit pixel independently");
    noise->add_option("--seed", noise_cmd->spec.seed, "Random seed")->capture_default_str();
    noise->add_option("input", noise_cmd->input, "Input PPM")->required();
    noise->add_option("output", noise_cmd->output, "Output PPM")->required();
    noise->callback([&, noise_cmd] {
        noise_cmd->spec.kind = impulse_kind_from_string(noise_kind);
        config = *noise_cmd;
    });

    // filter
    auto* filter = app.add_subcommand("filter", "Run a vector-order-statistics filter");
    auto filter_cmd = std::make_shared<FilterCommand>();
    std::string filter_kind = "fvmlf-scheme";
    filter->add_option("--kind", filter_kind,
                       "Filter: vmf, fvmf, fvmlf-full or fvmlf-scheme")
        ->check(CLI::IsMember({"vmf", "fvmf", "fvmlf-full", "fvmlf-scheme"}))
        ->capture_default_str();
    filter->add_option("--p", filter_cmd->params.p, "Minkowski exponent (vmf)")
        ->check(CLI::Range(1.0, 1e9))
        ->capture_default_str();
    filter->add_option("--K", filter_cmd->params.smoothing,
                       "Smoothing constant of the fuzzy metrics")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    filter->add_option("--window", filter_cmd->params.side, "Window side (odd, >= 3)")
        ->check(CLI::Range(3, 99))
        ->check(odd_window)
        ->capture_default_str();
    filter->add_option("--threads", filter_cmd->params.threads,
                       "Worker threads (0 = hardware concurrency)")
        ->check(CLI::Range(0, 1024))
        ->capture_default_str();
    filter->add_option("input", filter_cmd->input, "Input PPM")->required();
    filter->add_option("output", filter_cmd->output, "Output PPM")->required();
    filter->callback([&, filter_cmd] {
        filter_cmd->kind = filter_kind_from_string(filter_kind);
        config = *filter_cmd;
    });

    // eval
    auto* eval = app.add_subcommand("eval", "Print mae,psnr,ncd of test vs reference");
    auto eval_cmd = std::make_shared<EvalCommand>();
    eval->add_option("reference", eval_cmd->reference, "Reference PPM")->required();
    eval->add_option("test", eval_cmd->test, "Test PPM")->required();
    eval->callback([&, eval_cmd] { config = *eval_cmd; });

    // sweep
    auto* sweep = app.add_subcommand(
        "sweep", "Noise -> filter -> eval over a K x density grid, one CSV row per cell");
    auto sweep_cmd = std::make_shared<SweepCommand>();
    std::vector<std::string> sweep_filters{"vmf", "fvmf", "fvmlf-scheme"};
    std::string sweep_noise_kind = "fixed-value";
    sweep->add_option("--K", sweep_cmd->smoothings, "Smoothing constants to sweep")
        ->delimiter(',')
        ->capture_default_str();
    sweep->add_option("--density", sweep_cmd->densities, "Noise densities to sweep")
        ->delimiter(',')
        ->capture_default_str();
    sweep->add_option("--filters", sweep_filters, "Filter kinds to sweep")
        ->delimiter(',')
        ->capture_default_str();
    sweep->add_option("--noise-kind", sweep_noise_kind, "Impulse model for corruption")
        ->check(CLI::IsMember({"fixed-value", "random-value"}))
        ->capture_default_str();
    sweep->add_flag("--per-channel", sweep_cmd->per_channel,
                    "Draw each channel of a hit pixel independently");
    sweep->add_option("--seed", sweep_cmd->seed, "Random seed")->capture_default_str();
    sweep->add_option("--p", sweep_cmd->p, "Minkowski exponent (vmf)")
        ->check(CLI::Range(1.0, 1e9))
        ->capture_default_str();
    sweep->add_option("--window", sweep_cmd->side, "Window side (odd, >= 3)")
        ->check(CLI::Range(3, 99))
        ->check(odd_window)
        ->capture_default_str();
    sweep->add_option("--threads", sweep_cmd->threads,
                      "Worker threads (0 = hardware concurrency)")
        ->check(CLI::Range(0, 1024))
        ->capture_default_str();
    sweep->add_option("--out", sweep_cmd->output_csv, "CSV output path (default: stdout)");
    sweep->add_option("input", sweep_cmd->input, "Clean input PPM")->required();
    sweep->callback([&, sweep_cmd] {
        sweep_cmd->kinds = parse_filter_list(sweep_filters);
        sweep_cmd->noise_kind = impulse_kind_from_string(sweep_noise_kind);
        config = *sweep_cmd;
    });

    // axioms
    auto* axioms = app.add_subcommand(
        "axioms", "Run the sampling harness over every metric construction");
    auto axioms_cmd = std::make_shared<AxiomsCommand>();
    axioms->add_option("--seed", axioms_cmd->seed, "Random seed")->capture_default_str();
    axioms->add_option("--samples", axioms_cmd->samples, "Tuples per axiom")
        ->check(CLI::Range(1, 100000000))
        ->capture_default_str();
    axioms->callback([&, axioms_cmd] { config = *axioms_cmd; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return fmf::tools::exit_usage;
    }

    if (!config) {
        std::cerr << "error: no command given\n";
        return fmf::tools::exit_usage;
    }
    return fmf::tools::run(*config, std::cout, std::cerr);
}
