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

#include "fmf/generalized_metric.hpp"

namespace fmf {

double gn_rho(std::span<const double> points) {
    require_min_arity(points.size(), 3, "gn_rho");
    const auto pts = detail::sorted_points(points);
    // Sorting the points lets the absolute values drop out; summing the
    // terms in canonical order makes the result bit-identical for any
    // permutation of the inputs and matches gn_from_metric in sum mode.
    std::vector<double> terms;
    terms.reserve(pts.size() * (pts.size() - 1) / 2);
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            terms.push_back(pts[j] - pts[i]);
    return detail::sorted_sum(terms);
}

GeneralizedNMetric<double> make_gn_rho(int arity) {
    require_min_arity(static_cast<std::size_t>(arity), 3, "make_gn_rho");
    return {arity, [](std::span<const double> pts) { return gn_rho(pts); }};
}

} // namespace fmf
