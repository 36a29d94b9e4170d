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

#include "risdim/errors.hpp"
#include "risdim/power_model.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

using namespace risdim;

namespace {

double rel(double a, double b)
{
    return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

} // namespace

TEST_CASE("ris_power_exact at midpoint and symmetry")
{
    ModelParams params;
    // 16 / 1.16^2, evaluated independently with mpmath
    CHECK(ris_power_exact({1.0, 0.5, 0.2}, params) == doctest::Approx(11.890606420927469).epsilon(1e-14));
    CHECK(ris_power_exact({1.0, 0.2, 0.3}, params) == doctest::Approx(ris_power_exact({1.0, 0.8, 0.3}, params)).epsilon(1e-15));

    const double ps = (1.0 - std::sqrt(0.84)) / 2.0;
    CHECK(ps == doctest::Approx(0.0417424).epsilon(1e-6));
    CHECK(ris_power_exact({1.0, ps, 0.2}, params) == doctest::Approx(25.0).epsilon(1e-12));
}

TEST_CASE("ris_power singular geometry")
{
    CHECK_THROWS_AS(ris_power(10.0, 0.0, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(ris_power(10.0, 10.0, 0.0, 1.0), DomainError);
    // z = 0 away from the endpoints stays finite
    CHECK(ris_power(10.0, 5.0, 0.0, 1.0) == doctest::Approx(1.0 / 625.0));
    CHECK_THROWS_AS(ris_power(0.0, 0.5, 1.0, 1.0), DomainError);
}

TEST_CASE("normalize examples and round trip")
{
    auto n = normalize({50.0, 5.0, 1.0});
    CHECK(n.p == doctest::Approx(0.1));
    CHECK(n.q == doctest::Approx(0.02));
    CHECK(n.r == 50.0);
    n = normalize({25.0, 12.5, 1.0});
    CHECK(n.p == 0.5);
    CHECK(n.q == 0.04);
    n = normalize({1.0, 0.3, 0.2});
    CHECK(n.p == 0.3);
    CHECK(n.q == 0.2);

    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> R(0.1, 200.0), U(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const double r = R(gen);
        const LinkGeometry g{r, U(gen) * r, (0.01 + U(gen)) * r};
        const LinkGeometry back = denormalize(normalize(g));
        CHECK(rel(back.r, g.r) <= 1e-14);
        if (g.y != 0.0)
            CHECK(rel(back.y, g.y) <= 1e-14);
        CHECK(rel(back.z, g.z) <= 1e-14);
    }
}

TEST_CASE("ris_power_normalized examples")
{
    const double q = 0.2;
    CHECK(ris_power_normalized(q, 0.0) == doctest::Approx(1.0 / (q * q * (1.0 + q * q))).epsilon(1e-14));
    CHECK(ris_power_normalized(q, 0.0) == doctest::Approx(24.038461538461537).epsilon(1e-14));
    for (double qq : {0.05, 0.2, 0.7, 2.0})
        CHECK(ris_power_normalized(qq, 0.5) ==
              doctest::Approx(16.0 / ((1 + 4 * qq * qq) * (1 + 4 * qq * qq))).epsilon(1e-14));

    // r^4 P(r, q r; p r) does not depend on r
    const double p = 0.3, qq = 0.07;
    const double base = ris_power_normalized(qq, p);
    for (double r : {1.0, 25.0, 50.0})
        CHECK(rel(std::pow(r, 4) * ris_power(r, p * r, qq * r, 1.0), base) <= 1e-12);
}

TEST_CASE("symmetry, scaling and peak identity over random draws")
{
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    for (int i = 0; i < 500; ++i) {
        const double q = 0.001 + 2.0 * U(gen);
        const double p = U(gen);
        CHECK(rel(ris_power_normalized(q, p), ris_power_normalized(q, 1.0 - p)) <= 1e-14);

        double lo = INFINITY, hi = 0.0;
        for (double r : {1.0, 10.0, 25.0, 50.0, 100.0}) {
            const double v = std::pow(r, 4) * ris_power(r, p * r, q * r, 1.0);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        CHECK((hi - lo) / lo <= 1e-12);

        const double qs = 0.499 * U(gen) + 1e-4;
        const double S = 0.1 + 10.0 * U(gen);
        CHECK(rel(ris_power_normalized(qs, peak_location(qs), S) * qs * qs, S) <= 1e-12);
    }
}

TEST_CASE("extremum_locations")
{
    auto rep = extremum_locations(0.2);
    REQUIRE(rep.kind == ExtremaKind::three_extrema);
    REQUIRE(rep.p_values.size() == 3);
    CHECK(rep.p_values[0] == doctest::Approx(0.0417424).epsilon(1e-6));
    CHECK(rep.p_values[1] == 0.5);
    CHECK(rep.p_values[2] == doctest::Approx(0.9582576).epsilon(1e-6));
    CHECK(rep.values[0] == doctest::Approx(25.0).epsilon(1e-12));
    CHECK(rep.values[2] == doctest::Approx(25.0).epsilon(1e-12));

    rep = extremum_locations(0.6);
    CHECK(rep.kind == ExtremaKind::single_maximum);
    CHECK(rep.p_values == std::vector<double>{0.5});

    rep = extremum_locations(0.5);
    CHECK(rep.kind == ExtremaKind::single_maximum);
    CHECK(rep.p_values == std::vector<double>{0.5});

    // argmax does not depend on S
    const auto a = extremum_locations(0.13, 1.0);
    const auto b = extremum_locations(0.13, 37.5);
    CHECK(a.p_values == b.p_values);
    CHECK(b.values[0] == doctest::Approx(37.5 * a.values[0]).epsilon(1e-14));
}

TEST_CASE("grid maxima follow the extremum structure")
{
    const int n = 20001;
    for (double q : {0.05, 0.1, 0.2, 0.3, 0.45}) {
        int best = 0;
        double best_v = -1.0;
        for (int i = 0; i <= n / 2; ++i) {
            const double v = ris_power_normalized(q, static_cast<double>(i) / (n - 1));
            if (v > best_v) {
                best_v = v;
                best = i;
            }
        }
        CHECK(std::abs(static_cast<double>(best) / (n - 1) - peak_location(q)) <= 1.0 / (n - 1));
        const double h = 1.0 / (n - 1);
        CHECK(ris_power_normalized(q, 0.5) < ris_power_normalized(q, 0.5 - h));
        CHECK(ris_power_normalized(q, 0.5) < ris_power_normalized(q, 0.5 + h));
    }
    for (double q : {0.51, 0.6, 1.0, 3.0}) {
        int best = 0;
        double best_v = -1.0;
        for (int i = 0; i < n; ++i) {
            const double v = ris_power_normalized(q, static_cast<double>(i) / (n - 1));
            if (v > best_v) {
                best_v = v;
                best = i;
            }
        }
        CHECK(best == (n - 1) / 2);
    }
}

TEST_CASE("los and total power")
{
    ModelParams params;
    params.los_ref = 1e-6;
    params.los_exponent = 2.0;
    CHECK(los_power(1.0, params) == doctest::Approx(1e-6).epsilon(1e-15));
    CHECK(los_power(2.0, params) == doctest::Approx(2.5e-7).epsilon(1e-15));
    CHECK(los_power(50.0, params) == doctest::Approx(4e-10).epsilon(1e-15));
    CHECK(los_power(10.0, params) > los_power(11.0, params));

    const LinkGeometry g{25.0, 1.0, 1.0};
    CHECK(total_power(g, params) == doctest::Approx(1.6e-9 + 1.0 / (2.0 * (576.0 + 1.0))).epsilon(1e-14));

    ModelParams no_ris = params;
    no_ris.S = 0.0;
    CHECK(total_power(g, no_ris) == los_power(25.0, params));
    ModelParams ris_only = params;
    ris_only.los_ref = 0.0;
    CHECK(total_power(g, ris_only) == ris_power_exact(g, params));
}

TEST_CASE("ModelParams validation")
{
    ModelParams p;
    CHECK_NOTHROW(p.validate());
    p.rho = -1.0;
    CHECK_THROWS_AS(p.validate(), ValidationError);
}
