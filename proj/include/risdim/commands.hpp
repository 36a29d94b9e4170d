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

#include "risdim/assignment.hpp"
#include "risdim/scenario.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace risdim {

enum class OutputFormat { csv, json };

// Column-oriented result of one command. Every column carries the method that
// produced it (input, closed_form, quadrature, piecewise, monte_carlo).
struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::string> methods;
    std::vector<std::vector<nlohmann::json>> rows; // null renders as an empty CSV cell
};

struct CommandOutput {
    Table table;
    std::optional<nlohmann::json> plan; // assignment plan, when pairs were given
};

// Rows (p, exact, piecewise, rate_no_ris, rate_with_ris) at the scenario's r and z.
CommandOutput cmd_sweep(const Scenario& s);

// Rows (q, closed_form, quadrature, piecewise, mc_mean, mc_stderr) over the q grid, z = q r.
// The Monte Carlo columns are null when n_reps = 0.
CommandOutput cmd_campbell(const Scenario& s);

// One-row Monte Carlo estimate next to the closed form.
CommandOutput cmd_montecarlo(const Scenario& s);

// x*(q) and span curve over the q grid plus the assignment plan. P_star is taken
// from the scenario or solved from the calibration point first.
CommandOutput cmd_assign(const Scenario& s);

CommandOutput run_command(const std::string& name, const Scenario& s);

// Shortest round-trip decimal form.
std::string format_double(double v);

std::string render_csv(const Table& t);
nlohmann::json table_to_json(const Table& t);
std::string render(const CommandOutput& out, OutputFormat fmt);

nlohmann::json plan_to_json(const AssignmentPlan& plan, double P_star, const std::vector<double>& ris_positions);

} // namespace risdim
