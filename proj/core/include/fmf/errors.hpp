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

#ifndef FMF_ERRORS_HPP
#define FMF_ERRORS_HPP

#include <stdexcept>

namespace fmf {

/// Argument outside the mathematical domain of an operation
/// (e.g. a t-norm operand outside [0,1], or t <= 0).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Wrong number of points for an n-ary functional.
class ArityError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Construction requested with ingredients it is not defined for
/// (e.g. the pairwise-product metric with a non-product t-norm).
class UnsupportedConstruction : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Window geometry a filter variant does not accept.
class UnsupportedWindow : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Two images that were expected to have identical dimensions do not.
class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace fmf

#endif // FMF_ERRORS_HPP
