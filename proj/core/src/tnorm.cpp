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

#include "fmf/tnorm.hpp"

#include <algorithm>

#include "fmf/errors.hpp"

namespace fmf {

namespace {

void require_unit_interval(double v, const char* which) {
    if (!(v >= 0.0 && v <= 1.0))
        throw DomainError(std::string("t-norm operand ") + which + " outside [0,1]");
}

} // namespace

double TNorm::apply(double a, double b) const {
    require_unit_interval(a, "a");
    require_unit_interval(b, "b");
    switch (kind_) {
    case TNormKind::product: return a * b;
    case TNormKind::minimum: return std::min(a, b);
    }
    throw DomainError("unknown t-norm kind");
}

std::string TNorm::name() const {
    return kind_ == TNormKind::product ? "product" : "minimum";
}

double tnorm_apply(const TNorm& tnorm, double a, double b) { return tnorm.apply(a, b); }

} // namespace fmf
