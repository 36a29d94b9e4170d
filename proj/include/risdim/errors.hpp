// SPDX-License-Identifier: Apache-2.0
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

namespace risdim {

// Argument lies outside the mathematical domain of a model (singular geometry,
// q >= 1/2 for the piecewise model, level outside [P_min, P_max], ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Evaluation point outside the supported interval, e.g. p outside [0, 1].
class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

class NonConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Requested integrated power cannot be reached for the given q.
class InfeasibleTargetError : public std::runtime_error {
public:
    InfeasibleTargetError(const std::string& what, double requested, double achievable)
        : std::runtime_error(what), requested_(requested), achievable_(achievable) {}

    double requested() const noexcept { return requested_; }
    double achievable() const noexcept { return achievable_; }

private:
    double requested_;
    double achievable_;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : std::runtime_error(what), line_(line), column_(column) {}

    // 1-based; 0 when unknown.
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class ValidationError : public std::invalid_argument {
public:
    ValidationError(const std::string& field, const std::string& what)
        : std::invalid_argument(field + ": " + what), field_(field) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

} // namespace risdim
