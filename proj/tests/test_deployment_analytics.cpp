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

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace risdim;

namespace {

double rel(double a, double b)
{
    return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

// Composite Gauss-Legendre (5 nodes) on a graded mesh that clusters panels near
// both endpoints, where the single-RIS power peaks. Independent of the
// adaptive Simpson integrator used by the library.
double gauss_line_integral(double r, double z, double lo, double hi)
{
    static const double x[5] = {0.0, -0.5384693101056831, 0.5384693101056831, -0.9061798459386640,
                                0.9061798459386640};
    static const double w[5] = {0.5688888888888889, 0.4786286704993665, 0.4786286704993665, 0.2369268850561891,
                                0.2369268850561891};
    std::vector<double> mesh;
    const int n = 4000;
    for (int i = 0; i <= n; ++i) {
        const double t = static_cast<double>(i) / n;
        const double s = 0.5 - 0.5 * std::cos(std::acos(-1.0) * t); // Chebyshev grading
        mesh.push_back(lo + (hi - lo) * s);
    }
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        const double a = mesh[i], b = mesh[i + 1];
        const double c = 0.5 * (a + b), h = 0.5 * (b - a);
        for (int k = 0; k < 5; ++k)
            total += h * w[k] * ris_power(r, c + h * x[k], z, 1.0);
    }
    return total;
}

} // namespace

TEST_CASE("campbell_average_power spot values")
{
    // mpmath quadrature of the single-RIS power over (0, r)
    CHECK(campbell_average_power(25.0, 1.0, 1.0, 1.0).value == doctest::Approx(0.0056864599507650573).epsilon(1e-13));
    CHECK(campbell_average_power(50.0, 3.0, 1.0, 1.0).value == doctest::Approx(0.00048598661141311801).epsilon(1e-13));
    CHECK(campbell_average_power(25.0, 1.0, 0.0, 1.0).value == 0.0);
    const double one = campbell_average_power(30.0, 2.0, 0.7, 1.3).value;
    CHECK(campbell_average_power(30.0, 2.0, 1.4, 1.3).value == doctest::Approx(2.0 * one).epsilon(1e-15));
    CHECK(campbell_average_power(30.0, 2.0, 0.7, 2.6).value == doctest::Approx(2.0 * one).epsilon(1e-15));
    CHECK(campbell_average_power(25.0, 1.0, 1.0, 1.0).method == Method::closed_form);
    CHECK_THROWS_AS(campbell_average_power(25.0, 0.0, 1.0, 1.0), DomainError);
}

TEST_CASE("closed form against two independent quadratures")
{
    for (double r : {10.0, 25.0, 50.0, 100.0}) {
        for (double z : {0.5, 1.0, 2.0, 3.0, 5.0}) {
            const double closed = campbell_average_power(r, z, 1.0, 1.0).value;
            const auto quad = quadrature_average_power(r, z, 1.0, 1.0, 1e-10);
            CHECK(quad.method == Method::quadrature);
            CHECK(rel(closed, quad.value) <= 1e-9);
            CHECK(rel(closed, gauss_line_integral(r, z, 0.0, r)) <= 1e-9);
        }
    }
    CHECK(quadrature_average_power(25.0, 1.0, 0.0, 1.0, 1e-10).value == 0.0);
}

TEST_CASE("full corridor option")
{
    CorridorSpan span;
    span.full_corridor = true;
    span.half_length = 60.0;
    const double closed = campbell_average_power(25.0, 1.0, 1.0, 1.0, span).value;
    const double quad = quadrature_average_power(25.0, 1.0, 1.0, 1.0, 1e-11, span).value;
    CHECK(rel(closed, quad) <= 1e-9);
    CHECK(rel(closed, gauss_line_integral(25.0, 1.0, -60.0, 60.0)) <= 1e-9);
    CHECK(closed > campbell_average_power(25.0, 1.0, 1.0, 1.0).value);
    span.half_length = 0.0;
    CHECK_THROWS_AS(campbell_average_power(25.0, 1.0, 1.0, 1.0, span), DomainError);
}

TEST_CASE("piecewise_average_power")
{
    CHECK(piecewise_average_power(1.0, 0.04, 1.0, 1.0).value == doctest::Approx(321.37326384061936).epsilon(1e-12));
    const double a = piecewise_average_power(10.0, 0.1, 1.0, 1.0).value;
    const double b = piecewise_average_power(20.0, 0.1, 1.0, 1.0).value;
    CHECK(a / b == doctest::Approx(8.0).epsilon(1e-14));
    CHECK(piecewise_average_power(10.0, 0.1, 2.0, 3.0).value == doctest::Approx(6.0 * a).epsilon(1e-14));
    CHECK_THROWS_AS(piecewise_average_power(10.0, 0.5, 1.0, 1.0), DomainError);

    // comparison run at r = 25, q = 0.04 (z = 1). The linear fall from p* to 1/2 sits far
    // above the true 1/p^2 decay for small q, so the piecewise average overshoots.
    const double pw = piecewise_average_power(25.0, 0.04, 1.0, 1.0).value;
    const double exact = campbell_average_power(25.0, 1.0, 1.0, 1.0).value;
    MESSAGE("piecewise vs closed form at (25, 0.04): rel diff = " << rel(pw, exact));
    CHECK(pw > exact);
}

TEST_CASE("piecewise average drifts from the closed form as q shrinks")
{
    double prev = 0.0;
    for (double q : {0.3, 0.2, 0.1, 0.05}) {
        const double r = 25.0;
        const double err = rel(piecewise_average_power(r, q, 1.0, 1.0).value,
                               campbell_average_power(r, q * r, 1.0, 1.0).value);
        CHECK(err > prev);
        prev = err;
    }
}

TEST_CASE("wall_average_power")
{
    // mpmath: integral over q in [0.01, 0.49] of the closed-form inner integral
    CHECK(wall_normalized_integral({0.01, 0.49}) == doctest::Approx(13.160733357842047).epsilon(1e-9));

    const double base = 25.0 * 25.0 * wall_average_power(25.0, 1.0, 1.0).value;
    for (double r : {10.0, 50.0}) {
        const double v = r * r * wall_average_power(r, 1.0, 1.0).value;
        CHECK(rel(v, base) <= 1e-8);
    }
    CHECK(wall_average_power(20.0, 1.0, 1.0).value / wall_average_power(40.0, 1.0, 1.0).value ==
          doctest::Approx(4.0).epsilon(1e-12));
    CHECK(wall_average_power(20.0, 0.0, 1.0).value == 0.0);
    CHECK(wall_average_power(20.0, 2.0, 3.0).value ==
          doctest::Approx(6.0 * wall_average_power(20.0, 1.0, 1.0).value).epsilon(1e-12));
    CHECK_THROWS_AS(wall_average_power(20.0, 1.0, 1.0, {0.3, 0.3}), DomainError);
    CHECK_THROWS_AS(wall_average_power(20.0, 1.0, 1.0, {0.0, 0.3}), DomainError);
}

TEST_CASE("wall average matches a physical-coordinate double integral")
{
    // Integrate over the wall in (y, z) directly, with the inner y-integral in closed form.
    const double r = 10.0;
    const double z_lo = 0.01 * r, z_hi = 0.49 * r;
    const int n = 20000;
    double total = 0.0;
    // midpoint in log z: the integrand behaves like 1/z near the lower edge
    const double a = std::log(z_lo), b = std::log(z_hi), h = (b - a) / n;
    for (int i = 0; i < n; ++i) {
        const double z = std::exp(a + (i + 0.5) * h);
        total += campbell_average_power(r, z, 1.0, 1.0).value * z * h;
    }
    CHECK(rel(total, wall_average_power(r, 1.0, 1.0).value) <= 1e-7);
}
