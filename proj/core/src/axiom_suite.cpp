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

#include "fmf/axiom_suite.hpp"

#include <cmath>

#include "fmf/axiom_checks.hpp"
#include "fmf/fuzzy_metric.hpp"
#include "fmf/generalized_metric.hpp"
#include "fmf/sample_domains.hpp"

namespace fmf {

namespace {

double abs_diff(const double& a, const double& b) { return std::abs(a - b); }

SuiteEntry real_gn_entry(const std::string& name, const GeneralizedNMetric<double>& gn,
                         std::uint64_t seed, int samples) {
    SampleSpec<RealInterval> spec;
    spec.tuple_arity = gn.arity;
    spec.count = samples;
    spec.seed = seed;
    return {name, check_gn_axioms(gn, spec)};
}

SuiteEntry real_fn_entry(const std::string& name, const FuzzyNMetric<double>& fn,
                         std::uint64_t seed, int samples) {
    SampleSpec<RealInterval> spec;
    spec.tuple_arity = fn.arity;
    spec.count = samples;
    spec.seed = seed;

    SuiteEntry entry{name, check_fn_axioms(fn, spec)};
    entry.reports.push_back(check_power_inequality(fn, spec));
    entry.reports.push_back(check_monotone_t(fn, spec));
    return entry;
}

SuiteEntry product_metric_entry(int arity, std::uint64_t seed, int samples) {
    const auto pair = make_standard_fuzzy_metric<double>(abs_diff);
    const auto fn = make_product_metric(pair, arity);

    SampleSpec<RealInterval> spec;
    spec.tuple_arity = arity;
    spec.count = samples;
    spec.seed = seed;

    SuiteEntry entry{"product-metric/n=" + std::to_string(arity), check_fn_axioms(fn, spec)};
    entry.reports.push_back(check_power_inequality(fn, spec));
    entry.reports.push_back(check_monotone_t(fn, spec));
    entry.reports.push_back(check_subset_identity(pair, arity, spec));
    entry.reports.push_back(check_ball_containment(fn, spec, 0.3, 1.0));

    Rng rng(seed);
    AxiomReport separation{"hausdorff-separation"};
    for (int pair_idx = 0; pair_idx < 3; ++pair_idx) {
        const double x = spec.domain.sample(rng);
        const double y = detail::sample_distinct_from(spec.domain, x, rng);
        SampleSpec<RealInterval> candidate_spec = spec;
        candidate_spec.seed = seed + static_cast<std::uint64_t>(pair_idx) + 1;
        const auto r = check_hausdorff_separation(fn, x, y, 1.0, candidate_spec);
        separation.checked += r.checked;
        for (const auto& v : r.violations) separation.violations.push_back(v);
    }
    entry.reports.push_back(std::move(separation));
    return entry;
}

SuiteEntry frn_entry(int tuple_arity, std::uint64_t seed, int samples) {
    const BoundedBox box{0.0, 255.0, 1024.0, 3};
    const auto fn = make_stationary_frn(tuple_arity, box);

    SampleSpec<RgbCube> spec;
    spec.tuple_arity = tuple_arity;
    spec.count = samples;
    spec.seed = seed;

    SuiteEntry entry{"stationary-frn/r=" + std::to_string(tuple_arity),
                     check_fn_axioms(fn, spec)};
    if (tuple_arity >= 3) entry.reports.push_back(check_power_inequality(fn, spec));
    entry.reports.push_back(check_monotone_t(fn, spec));
    entry.reports.push_back(check_f_bounded(fn, spec, box.floor_value() - 1e-12));
    entry.reports.push_back(check_ball_containment(fn, spec, 0.3, 1.0));

    Rng rng(seed);
    AxiomReport separation{"hausdorff-separation"};
    for (int pair_idx = 0; pair_idx < 3; ++pair_idx) {
        const Channels x = spec.domain.sample(rng);
        const Channels y = detail::sample_distinct_from(spec.domain, x, rng);
        SampleSpec<RgbCube> candidate_spec = spec;
        candidate_spec.seed = seed + static_cast<std::uint64_t>(pair_idx) + 1;
        const auto r = check_hausdorff_separation(fn, x, y, 1.0, candidate_spec);
        separation.checked += r.checked;
        for (const auto& v : r.violations) separation.violations.push_back(v);
    }
    entry.reports.push_back(std::move(separation));
    return entry;
}

} // namespace

std::vector<SuiteEntry> run_standard_axiom_suite(std::uint64_t seed, int samples) {
    std::vector<SuiteEntry> entries;

    for (int arity = 3; arity <= 5; ++arity) {
        const std::string n = std::to_string(arity);
        entries.push_back(
            real_gn_entry("gn-rho/n=" + n, make_gn_rho(arity), seed, samples));
        entries.push_back(real_gn_entry(
            "gn-sum/n=" + n, make_gn_from_metric<double>(arity, abs_diff, GnCombine::sum),
            seed, samples));
        entries.push_back(real_gn_entry(
            "gn-max/n=" + n, make_gn_from_metric<double>(arity, abs_diff, GnCombine::max),
            seed, samples));
        entries.push_back(real_fn_entry("fuzzy-from-gn-rho/n=" + n,
                                        make_fuzzy_from_gn(make_gn_rho(arity)), seed, samples));
        entries.push_back(product_metric_entry(arity, seed, samples));
    }
    entries.push_back(frn_entry(2, seed, samples));
    entries.push_back(frn_entry(3, seed, samples));
    return entries;
}

bool all_passed(const std::vector<SuiteEntry>& entries) {
    for (const SuiteEntry& e : entries)
        if (!e.passed()) return false;
    return true;
}

} // namespace fmf
