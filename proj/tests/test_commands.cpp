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

#include "risdim/commands.hpp"
#include "risdim/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>

using namespace risdim;

namespace {

std::string first_line(const std::string& s)
{
    return s.substr(0, s.find('\n'));
}

} // namespace

TEST_CASE("format_double round-trips")
{
    CHECK(format_double(0.1) == "0.1");
    CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
    CHECK(format_double(2.0) == "2");
}

TEST_CASE("csv output starts with a provenance line")
{
    Scenario s;
    s.p_grid = {0.0, 0.5, 1.0};
    const auto csv = render(cmd_sweep(s), OutputFormat::csv);
    CHECK(first_line(csv) == "# sweep methods: p=input,exact=closed_form,piecewise=piecewise,"
                             "rate_no_ris=closed_form,rate_with_ris=closed_form");
    std::istringstream in(csv);
    std::string line;
    int n = 0;
    while (std::getline(in, line))
        ++n;
    CHECK(n == 5);

    const auto js = nlohmann::json::parse(render(cmd_sweep(s), OutputFormat::json));
    CHECK(js["table"] == "sweep");
    CHECK(js["methods"]["exact"] == "closed_form");
    CHECK(js["rows"].size() == 3);
}

TEST_CASE("sweep with S = 0 has equal rate columns")
{
    Scenario s;
    s.S = 0.0;
    const auto out = cmd_sweep(s);
    for (const auto& row : out.table.rows) {
        CHECK(row[1].get<double>() == 0.0);
        CHECK(row[3] == row[4]);
    }
}

TEST_CASE("sweep exact column scales as r^-4")
{
    Scenario a, b;
    a.r = 20.0;
    a.z = 2.0;
    b.r = 40.0;
    b.z = 4.0;
    const auto ta = cmd_sweep(a).table, tb = cmd_sweep(b).table;
    for (std::size_t i = 0; i < ta.rows.size(); ++i)
        CHECK(ta.rows[i][1].get<double>() / tb.rows[i][1].get<double>() == doctest::Approx(16.0).epsilon(1e-12));
}

TEST_CASE("campbell without replications leaves MC columns empty")
{
    Scenario s;
    s.q_grid = {0.04, 0.2};
    const auto out = cmd_campbell(s);
    REQUIRE(out.table.rows.size() == 2);
    for (const auto& row : out.table.rows) {
        CHECK(row[4].is_null());
        CHECK(row[5].is_null());
        CHECK(std::abs(row[1].get<double>() - row[2].get<double>()) <= 1e-9 * row[1].get<double>());
    }
    CHECK(out.table.rows[0][6] == out.table.rows[1][6]);
    CHECK(out.table.rows[0][6].get<double>() > 0.0);
    const auto csv = render_csv(out.table);
    CHECK(csv.find(",,,") != std::string::npos);

    s.n_reps = 200;
    const auto mc = cmd_campbell(s);
    CHECK(mc.table.rows[0][4].is_number());
}

TEST_CASE("montecarlo command")
{
    Scenario s;
    s.n_reps = 2000;
    s.seed = 11;
    const auto out = cmd_montecarlo(s);
    REQUIRE(out.table.rows.size() == 1);
    CHECK(std::abs(out.table.rows[0][8].get<double>()) < 4.0);
    s.n_reps = 0;
    CHECK_THROWS(cmd_montecarlo(s));
}

TEST_CASE("assign command")
{
    Scenario s;
    s.q_grid = {0.04, 0.06, 0.3};
    CHECK_THROWS_AS(cmd_assign(s), ValidationError);

    s.calibration = Calibration{};
    const auto out = cmd_assign(s);
    CHECK(!out.plan);
    REQUIRE(out.table.rows.size() == 3);
    CHECK(out.table.rows[0][1].get<double>() == doctest::Approx(0.85).epsilon(1e-8));
    CHECK(out.table.rows[2][7] == false);
    CHECK(out.table.rows[2][1].is_null());

    s.pairs = {{0.0, 25.0}};
    s.ris_positions = {0.1, 12.5, 24.9};
    const auto with_plan = cmd_assign(s);
    REQUIRE(with_plan.plan);
    CHECK((*with_plan.plan)["pairs"].size() == 1);
    CHECK((*with_plan.plan)["pairs"][0]["status"] == "ok");
}

TEST_CASE("repeated runs are byte-identical")
{
    Scenario s;
    s.q_grid = {0.05, 0.1};
    s.n_reps = 100;
    s.seed = 3;
    for (const char* name : {"sweep", "campbell", "montecarlo"}) {
        const auto a = render(run_command(name, s), OutputFormat::csv);
        const auto b = render(run_command(name, s), OutputFormat::csv);
        CHECK(a == b);
    }
    CHECK_THROWS_AS(run_command("plot", s), ValidationError);
}
