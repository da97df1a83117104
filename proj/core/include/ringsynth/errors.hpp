// SPDX-License-Identifier: Apache-2.0
//
// ringsynth: pattern synthesis for concentric ring antenna arrays
// Copyright (C) 2026 The ringsynth authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ringsynth {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An argument is outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

// Malformed external input (tables, config documents).
class FormatError : public Error {
public:
    using Error::Error;
};

// The least-squares design matrix is numerically rank deficient.
class SingularityError : public Error {
public:
    SingularityError(const std::string& what, std::size_t column, double condition)
        : Error(what), column_(column), condition_(condition) {}

    std::size_t column() const noexcept { return column_; }
    double condition_estimate() const noexcept { return condition_; }

private:
    std::size_t column_;
    double condition_;
};

// A pattern with no nonzero value cannot be normalized to its peak.
class DegeneratePatternError : public Error {
public:
    using Error::Error;
};

} // namespace ringsynth
