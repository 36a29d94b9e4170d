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

#include <array>

namespace risdim {

struct Knot {
    double p;
    double value;
};

// Piecewise-linear model of ris_power_normalized(q, .) / S for 0 < q < 1/2.
// Two segments on [0, 1/2] joined at the peak p*, mirrored about p = 1/2.
// Immutable after construction.
class PiecewiseSegments {
public:
    // Throws DomainError unless 0 < q < 1/2.
    explicit PiecewiseSegments(double q);

    double q() const noexcept { return q_; }
    double peak() const noexcept { return knots_[1].p; }

    // Knots at p = 0, p*, 1/2, 1 - p*, 1.
    const std::array<Knot, 5>& knots() const noexcept { return knots_; }

    // Rising segment on [0, p*].
    double rise_slope() const noexcept { return rise_slope_; }
    double rise_intercept() const noexcept { return rise_intercept_; }
    // Falling segment on (p*, 1/2], written as value(1/2) + fall_slope * (1/2 - p).
    double fall_slope() const noexcept { return fall_slope_; }
    double centre_value() const noexcept { return centre_value_; }

    // Throws RangeError outside [0, 1].
    double operator()(double p) const;

    // Exact integral of the piecewise function over [a, b] within [0, 1].
    double integral(double a, double b) const;

private:
    double half_eval(double p) const; // p in [0, 1/2]
    double half_primitive(double p) const; // integral over [0, p], p in [0, 1/2]
    double primitive(double p) const;

    double q_;
    double rise_slope_;
    double rise_intercept_;
    double fall_slope_;
    double centre_value_;
    std::array<Knot, 5> knots_;
};

PiecewiseSegments build_segments(double q);

double piecewise_eval(const PiecewiseSegments& segments, double p);

// Integral over [0, 1] as the sum of trapezoid areas under the segments.
double piecewise_integral(double q);

// The same integral in closed form:
//   (2 + q^2)(1 - s) / (2 q^2 (1 + q^2)) + (16 q^4 + 24 q^2 + 1) s / (2 q^2 (1 + 4 q^2)^2),
// with s = sqrt(1 - 4 q^2).
double piecewise_integral_closed_form(double q);

struct ErrorReport {
    double max_relative = 0.0;
    double mean_relative = 0.0;
    double argmax_p = 0.0;
    int n_grid = 0;
};

// Relative error of the piecewise model against the exact normalized power on
// a uniform n_grid-point grid over [0, 1].
ErrorReport approximation_error(double q, int n_grid);

} // namespace risdim
