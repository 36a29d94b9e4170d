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

#include "risdim/piecewise.hpp"

#include "risdim/errors.hpp"
#include "risdim/power_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace risdim {

namespace {

void require_piecewise_domain(const char* who, double q)
{
    if (!(q > 0.0 && q < 0.5))
        throw DomainError(std::string(who) + ": piecewise model requires 0 < q < 1/2, got q = " +
                          std::to_string(q));
}

} // namespace

PiecewiseSegments::PiecewiseSegments(double q) : q_(q)
{
    require_piecewise_domain("PiecewiseSegments", q);
    const double q2 = q * q;
    const double s = std::sqrt(1.0 - 4.0 * q2);
    const double one_minus_s = 2.0 * peak_location(q); // == 1 - s without cancellation
    const double a = 4.0 * q2 + 1.0;

    rise_slope_ = 2.0 / ((1.0 + q2) * one_minus_s);
    rise_intercept_ = 1.0 / (q2 * (q2 + 1.0));
    fall_slope_ = 2.0 * (16.0 * q2 * q2 - 8.0 * q2 + 1.0) / (q2 * s * a * a);
    centre_value_ = 16.0 / (a * a);

    const double ps = peak_location(q);
    knots_[1].p = ps;
    const double peak_value = half_eval(ps);
    knots_ = {Knot{0.0, half_eval(0.0)}, Knot{ps, peak_value}, Knot{0.5, half_eval(0.5)},
              Knot{1.0 - ps, peak_value}, Knot{1.0, half_eval(0.0)}};
}

double PiecewiseSegments::half_eval(double p) const
{
    if (p <= knots_[1].p)
        return rise_slope_ * p + rise_intercept_;
    return fall_slope_ * (0.5 - p) + centre_value_;
}

double PiecewiseSegments::operator()(double p) const
{
    if (!(p >= 0.0 && p <= 1.0))
        throw RangeError("piecewise_eval: p must lie in [0, 1], got p = " + std::to_string(p));
    return half_eval(p <= 0.5 ? p : 1.0 - p);
}

double PiecewiseSegments::half_primitive(double p) const
{
    const double ps = knots_[1].p;
    const double head = std::min(p, ps);
    double area = head * (rise_intercept_ + 0.5 * rise_slope_ * head);
    if (p > ps) {
        // Trapezoid between p* and p on the falling segment.
        area += 0.5 * (p - ps) * (half_eval(ps) + half_eval(p));
    }
    return area;
}

double PiecewiseSegments::primitive(double p) const
{
    if (p <= 0.5)
        return half_primitive(p);
    // Mirror: integral over [0, p] = 2 * I(1/2) - I(1 - p).
    return 2.0 * half_primitive(0.5) - half_primitive(1.0 - p);
}

double PiecewiseSegments::integral(double a, double b) const
{
    if (!(a >= 0.0 && b <= 1.0 && a <= b))
        throw RangeError("PiecewiseSegments::integral: need 0 <= a <= b <= 1");
    return primitive(b) - primitive(a);
}

PiecewiseSegments build_segments(double q)
{
    return PiecewiseSegments(q);
}

double piecewise_eval(const PiecewiseSegments& segments, double p)
{
    return segments(p);
}

double piecewise_integral(double q)
{
    const PiecewiseSegments seg(q);
    const auto& k = seg.knots();
    double area = 0.0;
    for (std::size_t i = 0; i + 1 < k.size(); ++i)
        area += 0.5 * (k[i + 1].p - k[i].p) * (k[i].value + k[i + 1].value);
    return area;
}

double piecewise_integral_closed_form(double q)
{
    require_piecewise_domain("piecewise_integral_closed_form", q);
    const double q2 = q * q;
    const double s = std::sqrt(1.0 - 4.0 * q2);
    const double one_minus_s = 2.0 * peak_location(q);
    const double a = 1.0 + 4.0 * q2;
    return (2.0 + q2) * one_minus_s / (2.0 * q2 * (1.0 + q2)) +
           (16.0 * q2 * q2 + 24.0 * q2 + 1.0) * s / (2.0 * q2 * a * a);
}

ErrorReport approximation_error(double q, int n_grid)
{
    if (n_grid < 2)
        throw DomainError("approximation_error: n_grid must be at least 2");
    const PiecewiseSegments seg(q);
    ErrorReport rep;
    rep.n_grid = n_grid;
    double sum = 0.0;
    for (int i = 0; i < n_grid; ++i) {
        const double p = static_cast<double>(i) / (n_grid - 1);
        const double exact = ris_power_normalized(q, p);
        const double rel = std::abs(seg(p) - exact) / exact;
        sum += rel;
        if (rel > rep.max_relative) {
            rep.max_relative = rel;
            rep.argmax_p = p;
        }
    }
    rep.mean_relative = sum / n_grid;
    return rep;
}

} // namespace risdim
