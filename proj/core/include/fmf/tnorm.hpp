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

#ifndef FMF_TNORM_HPP
#define FMF_TNORM_HPP

#include <string>

namespace fmf {

enum class TNormKind {
    product,
    minimum,
};

/// Continuous t-norm on [0,1]: associative, commutative, monotone binary
/// operation with identity 1. Two classical instances are provided.
class TNorm {
public:
    constexpr explicit TNorm(TNormKind kind) : kind_(kind) {}

    constexpr TNormKind kind() const { return kind_; }

    /// Combine two degrees. Throws DomainError if either operand is
    /// outside [0,1].
    double apply(double a, double b) const;

    std::string name() const;

    friend bool operator==(const TNorm&, const TNorm&) = default;

private:
    TNormKind kind_;
};

inline constexpr TNorm product_tnorm{TNormKind::product};
inline constexpr TNorm minimum_tnorm{TNormKind::minimum};

/// Free-function form of TNorm::apply.
double tnorm_apply(const TNorm& tnorm, double a, double b);

} // namespace fmf

#endif // FMF_TNORM_HPP
