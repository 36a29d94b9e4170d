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
#include "risdim/power_model.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace risdim {

// W = 10^((dBm - 30) / 10)
double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);

struct Calibration {
    double q = 0.04;
    double x = 0.85;

    bool operator==(const Calibration&) const = default;
};

// Everything a CLI run needs. Loaded from a YAML document with the sections
// geometry, density, model, sweep, montecarlo, assignment and run; see
// docs/scenario-format.md for the grammar and defaults.
struct Scenario {
    // geometry
    double r = 25.0;
    double z = 1.0;
    double corridor_length = 0.0; // 0 means 2 r

    // density
    double rho = 1.0;
    double beta = 1.0;

    // model
    double S = 1.0;
    double los_ref = 1e-6;
    double los_exponent = 2.0;
    double Pt_dBm = 30.0;
    double sigma2_dBm = -100.0;
    int elements_per_ris = 256;

    // sweep
    std::vector<double> p_grid;
    std::vector<double> q_grid;
    double q_min = 0.01;
    double q_max = 0.49;
    double quadrature_tol = 1e-10;

    // montecarlo
    std::uint64_t n_reps = 0;
    std::uint64_t seed = 1;
    unsigned threads = 0;

    // assignment
    std::optional<double> P_star;
    std::optional<Calibration> calibration;
    PowerModel power_model = PowerModel::exact;
    LeftEdgePolicy left_edge = LeftEdgePolicy::extend;
    std::vector<TxRxPair> pairs;
    std::vector<double> ris_positions;

    // run: commands executed by `scenario run`
    std::vector<std::string> run;

    Scenario();

    ModelParams model_params() const;
    double effective_corridor_length() const { return corridor_length > 0.0 ? corridor_length : 2.0 * r; }

    // Throws ValidationError naming the field ("density.rho", ...).
    void validate() const;

    bool operator==(const Scenario&) const = default;
};

// Throws ParseError (with line/column) for malformed YAML, unknown keys or
// wrongly typed values, and ValidationError for out-of-range values.
Scenario parse_scenario_text(const std::string& text);
Scenario parse_scenario(const std::string& path);

// YAML text that parse_scenario_text maps back to an equal Scenario.
std::string serialize_scenario(const Scenario& s);

std::vector<double> linspace(double start, double stop, std::size_t count);

} // namespace risdim
