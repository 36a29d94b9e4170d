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

#include "risdim/deployment_analytics.hpp"

#include "risdim/errors.hpp"
#include "risdim/piecewise.hpp"
#include "risdim/power_model.hpp"
#include "risdim/quadrature.hpp"

#include <cmath>

namespace risdim {

std::string_view to_string(Method m)
{
    switch (m) {
    case Method::closed_form: return "closed_form";
    case Method::quadrature: return "quadrature";
    case Method::piecewise: return "piecewise";
    case Method::monte_carlo: return "monte_carlo";
    }
    return "unknown";
}

namespace {

void check_line_inputs(const char* who, double r, double z, double rho, double S)
{
    if (!(r > 0.0))
        throw DomainError(std::string(who) + ": r must be positive");
    if (!(z > 0.0))
        throw DomainError(std::string(who) + ": z must be positive");
    if (!(rho >= 0.0))
        throw DomainError(std::string(who) + ": rho must be nonnegative");
    if (!(S >= 0.0))
        throw DomainError(std::string(who) + ": S must be nonnegative");
}

struct Interval {
    double lo, hi;
};

Interval corridor_interval(double r, const CorridorSpan& span)
{
    if (!span.full_corridor)
        return {0.0, r};
    if (!(span.half_length > 0.0))
        throw DomainError("corridor half_length must be positive");
    return {-span.half_length, span.half_length};
}

// Primitive of 1 / ((y^2 + z^2)((r - y)^2 + z^2)) in y.
double single_ris_primitive(double r, double z, double y)
{
    const double u = r - y;
    return ((r / z) * (std::atan(y / z) - std::atan(u / z)) + std::log((y * y + z * z) / (u * u + z * z))) /
           (r * (r * r + 4.0 * z * z));
}

} // namespace

AveragePowerResult campbell_average_power(double r, double z, double rho, double S, const CorridorSpan& span)
{
    check_line_inputs("campbell_average_power", r, z, rho, S);
    AveragePowerResult res{0.0, Method::closed_form, r, z, rho, S};
    if (!span.full_corridor) {
        const double bracket = (z / r) * std::log((r * r + z * z) / (z * z)) + std::atan(r / z);
        res.value = 2.0 * S * rho * bracket / (z * (r * r + 4.0 * z * z));
    } else {
        const Interval iv = corridor_interval(r, span);
        res.value = S * rho * (single_ris_primitive(r, z, iv.hi) - single_ris_primitive(r, z, iv.lo));
    }
    return res;
}

AveragePowerResult quadrature_average_power(double r, double z, double rho, double S, double tol,
                                            const CorridorSpan& span)
{
    check_line_inputs("quadrature_average_power", r, z, rho, S);
    if (!(tol > 0.0))
        throw DomainError("quadrature_average_power: tol must be positive");
    AveragePowerResult res{0.0, Method::quadrature, r, z, rho, S};
    if (rho == 0.0 || S == 0.0)
        return res;
    const Interval iv = corridor_interval(r, span);
    QuadratureOptions opt;
    opt.rel_tol = tol;
    const auto q = integrate([&](double y) { return ris_power(r, y, z, 1.0); }, iv.lo, iv.hi, opt);
    res.value = S * rho * q.value;
    return res;
}

AveragePowerResult piecewise_average_power(double r, double q, double rho, double S)
{
    if (!(r > 0.0))
        throw DomainError("piecewise_average_power: r must be positive");
    if (!(rho >= 0.0) || !(S >= 0.0))
        throw DomainError("piecewise_average_power: rho and S must be nonnegative");
    AveragePowerResult res{0.0, Method::piecewise, r, q, rho, S};
    res.value = S * rho / (r * r * r) * piecewise_integral(q);
    return res;
}

double wall_normalized_integral(const WallRange& range, double tol)
{
    if (!(range.q_min > 0.0 && range.q_min < range.q_max))
        throw DomainError("wall_normalized_integral: need 0 < q_min < q_max");
    QuadratureOptions inner_opt;
    inner_opt.rel_tol = tol * 1e-2;
    QuadratureOptions outer_opt;
    outer_opt.rel_tol = tol;
    const auto inner = [&](double q) {
        return integrate([q](double p) { return ris_power_normalized(q, p); }, 0.0, 1.0, inner_opt).value;
    };
    return integrate(inner, range.q_min, range.q_max, outer_opt).value;
}

AveragePowerResult wall_average_power(double r, double beta, double S, const WallRange& range, double tol)
{
    if (!(r > 0.0))
        throw DomainError("wall_average_power: r must be positive");
    if (!(beta >= 0.0) || !(S >= 0.0))
        throw DomainError("wall_average_power: beta and S must be nonnegative");
    AveragePowerResult res{0.0, Method::quadrature, r, range.q_min, beta, S};
    const double integral = wall_normalized_integral(range, tol);
    res.value = S * beta / (r * r) * integral;
    return res;
}

} // namespace risdim
