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
#include "risdim/quadrature.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace risdim;

TEST_CASE("adaptive Simpson on smooth integrands")
{
    QuadratureOptions opt;
    opt.rel_tol = 1e-12;
    CHECK(integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi, opt).value ==
          doctest::Approx(2.0).epsilon(1e-12));
    CHECK(integrate([](double x) { return std::exp(x); }, -1.0, 2.0, opt).value ==
          doctest::Approx(std::exp(2.0) - std::exp(-1.0)).epsilon(1e-12));
    // cubic: Simpson is exact
    const auto r = integrate([](double x) { return x * x * x - 2.0 * x; }, 0.0, 3.0, opt);
    CHECK(r.value == doctest::Approx(81.0 / 4.0 - 9.0).epsilon(1e-14));
}

TEST_CASE("sharp Lorentzian peak")
{
    const double w = 1e-3;
    QuadratureOptions opt;
    opt.rel_tol = 1e-11;
    const auto r = integrate([w](double x) { return w / (x * x + w * w); }, -1.0, 1.0, opt);
    CHECK(r.value == doctest::Approx(2.0 * std::atan(1.0 / w)).epsilon(1e-10));
    CHECK(r.intervals > detail::kInitialPanels);
    CHECK(r.error_estimate < 1e-9);
}

TEST_CASE("degenerate interval and argument errors")
{
    CHECK(integrate([](double) { return 1.0; }, 2.0, 2.0).value == 0.0);
    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 2.0, 1.0), DomainError);
    QuadratureOptions none;
    none.rel_tol = 0.0;
    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 0.0, 1.0, none), DomainError);
}

TEST_CASE("refinement cap raises NonConvergenceError")
{
    QuadratureOptions opt;
    opt.rel_tol = 1e-14;
    opt.max_intervals = 40;
    CHECK_THROWS_AS(integrate([](double x) { return 1e-4 / (x * x + 1e-8); }, -1.0, 1.0, opt),
                    NonConvergenceError);
}
