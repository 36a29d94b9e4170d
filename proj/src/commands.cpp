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

#include "risdim/deployment_analytics.hpp"
#include "risdim/errors.hpp"
#include "risdim/piecewise.hpp"
#include "risdim/power_model.hpp"
#include "risdim/stochastic_sim.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace risdim {

using nlohmann::json;

std::string format_double(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

json number_or_null(double v)
{
    return std::isfinite(v) ? json(v) : json(nullptr);
}

std::string cell_text(const json& c)
{
    if (c.is_null())
        return "";
    if (c.is_boolean())
        return c.get<bool>() ? "true" : "false";
    if (c.is_number_float())
        return format_double(c.get<double>());
    if (c.is_number_integer() || c.is_number_unsigned())
        return c.dump();
    return c.get<std::string>();
}

} // namespace

std::string render_csv(const Table& t)
{
    std::ostringstream out;
    out << "# " << t.name << " methods:";
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        out << (i == 0 ? " " : ",") << t.columns[i] << '=' << t.methods[i];
    out << '\n';
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        out << (i == 0 ? "" : ",") << t.columns[i];
    out << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i == 0 ? "" : ",") << cell_text(row[i]);
        out << '\n';
    }
    return out.str();
}

json table_to_json(const Table& t)
{
    json methods = json::object();
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        methods[t.columns[i]] = t.methods[i];
    json rows = json::array();
    for (const auto& row : t.rows) {
        json obj = json::object();
        for (std::size_t i = 0; i < row.size(); ++i)
            obj[t.columns[i]] = row[i];
        rows.push_back(std::move(obj));
    }
    return json{{"table", t.name}, {"methods", methods}, {"rows", rows}};
}

std::string render(const CommandOutput& out, OutputFormat fmt)
{
    if (fmt == OutputFormat::csv)
        return render_csv(out.table);
    json doc = table_to_json(out.table);
    if (out.plan)
        doc["plan"] = *out.plan;
    return doc.dump(2) + "\n";
}

CommandOutput cmd_sweep(const Scenario& s)
{
    const ModelParams params = s.model_params();
    const double q = s.z / s.r;
    const double r4 = s.r * s.r * s.r * s.r;
    std::optional<PiecewiseSegments> seg;
    if (q < 0.5)
        seg.emplace(q);
    const auto rates = rate_sweep(s.r, s.z, s.p_grid, params, s.elements_per_ris);

    CommandOutput out;
    out.table.name = "sweep";
    out.table.columns = {"p", "exact", "piecewise", "rate_no_ris", "rate_with_ris"};
    out.table.methods = {"input", "closed_form", "piecewise", "closed_form", "closed_form"};
    for (std::size_t i = 0; i < s.p_grid.size(); ++i) {
        const double p = s.p_grid[i];
        const double exact = ris_power(s.r, p * s.r, s.z, params.S);
        const json pw = seg ? json(params.S * (*seg)(p) / r4) : json(nullptr);
        out.table.rows.push_back({p, exact, pw, rates[i].rate_no_ris, rates[i].rate_with_ris});
    }
    return out;
}

CommandOutput cmd_campbell(const Scenario& s)
{
    CommandOutput out;
    out.table.name = "campbell";
    out.table.columns = {"q", "closed_form", "quadrature", "piecewise", "mc_mean", "mc_stderr", "wall_average"};
    out.table.methods = {"input", "closed_form", "quadrature", "piecewise", "monte_carlo", "monte_carlo",
                         "quadrature"};
    const ModelParams params = s.model_params();
    // wall deployment over q in [q_min, q_max]; does not depend on the row
    const double wall = wall_average_power(s.r, s.beta, s.S, {s.q_min, s.q_max}, s.quadrature_tol).value;
    for (std::size_t i = 0; i < s.q_grid.size(); ++i) {
        const double q = s.q_grid[i];
        const double z = q * s.r;
        const double closed = campbell_average_power(s.r, z, s.rho, s.S).value;
        const double quad = quadrature_average_power(s.r, z, s.rho, s.S, s.quadrature_tol).value;
        const json pw = q < 0.5 ? json(piecewise_average_power(s.r, q, s.rho, s.S).value) : json(nullptr);
        json mc_mean = nullptr;
        json mc_se = nullptr;
        if (s.n_reps > 0) {
            const auto est = monte_carlo_average(s.effective_corridor_length(), s.r, z, s.rho, params, s.n_reps,
                                                 s.seed + i, s.threads);
            mc_mean = est.mean;
            mc_se = est.std_error;
        }
        out.table.rows.push_back({q, closed, quad, pw, mc_mean, mc_se, wall});
    }
    return out;
}

CommandOutput cmd_montecarlo(const Scenario& s)
{
    if (s.n_reps < 2)
        throw ValidationError("montecarlo.n_reps", "the montecarlo command needs n_reps >= 2");
    const ModelParams params = s.model_params();
    const auto est =
        monte_carlo_average(s.effective_corridor_length(), s.r, s.z, s.rho, params, s.n_reps, s.seed, s.threads);
    const double closed = campbell_average_power(s.r, s.z, s.rho, s.S).value;
    const double dev = est.std_error > 0.0 ? (est.mean - closed) / est.std_error : 0.0;

    CommandOutput out;
    out.table.name = "montecarlo";
    out.table.columns = {"r", "z", "rho", "n_reps", "seed", "mc_mean", "mc_stderr", "closed_form", "z_score"};
    out.table.methods = {"input", "input", "input", "input", "input",
                         "monte_carlo", "monte_carlo", "closed_form", "monte_carlo"};
    out.table.rows.push_back({s.r, s.z, s.rho, est.n_reps, est.seed, est.mean, est.std_error, closed, dev});
    return out;
}

json plan_to_json(const AssignmentPlan& plan, double P_star, const std::vector<double>& ris_positions)
{
    json pairs = json::array();
    for (const auto& pa : plan.pairs) {
        json ris = json::array();
        for (auto j : pa.ris)
            ris.push_back(json{{"index", j}, {"y", ris_positions[j]}});
        json entry{{"pair", pa.pair_index},
                   {"r", pa.r},
                   {"q", pa.q},
                   {"status", std::string(to_string(pa.status))},
                   {"assigned", ris},
                   {"achieved_gain", pa.achieved_gain}};
        if (pa.status == PairStatus::ok) {
            entry["span"] = json::array({pa.span_lo, pa.span_hi});
            entry["mirror_span"] = json::array({pa.mirror_lo, pa.mirror_hi});
        }
        pairs.push_back(std::move(entry));
    }
    return json{{"P_star", P_star}, {"pairs", pairs}, {"unassigned", plan.unassigned}};
}

CommandOutput cmd_assign(const Scenario& s)
{
    AssignmentOptions opt;
    opt.model = s.power_model;
    opt.left_edge = s.left_edge;

    double P_star = 0.0;
    if (s.P_star) {
        P_star = *s.P_star;
    } else if (s.calibration) {
        P_star = calibrate_target_power(s.calibration->q, s.calibration->x, opt);
    } else {
        throw ValidationError("assignment", "the assign command needs P_star or a calibration point");
    }

    const std::string method = s.power_model == PowerModel::exact ? "quadrature" : "piecewise";
    CommandOutput out;
    out.table.name = "assign";
    out.table.columns = {"q", "x_star", "delta_l", "delta_r", "delta", "level", "P_star", "feasible", "clipped"};
    out.table.methods = {"input", method, method, method, method, method, "input", method, method};
    for (const auto& pt : x_star_curve(s.q_grid, P_star, opt)) {
        out.table.rows.push_back({pt.q, number_or_null(pt.x_star), number_or_null(pt.delta_l),
                                  number_or_null(pt.delta_r), number_or_null(pt.delta), number_or_null(pt.level),
                                  P_star, pt.feasible, pt.clipped});
    }
    if (!s.pairs.empty())
        out.plan = plan_to_json(assign_ris(s.pairs, s.ris_positions, s.z, P_star, opt), P_star, s.ris_positions);
    return out;
}

CommandOutput run_command(const std::string& name, const Scenario& s)
{
    if (name == "sweep")
        return cmd_sweep(s);
    if (name == "campbell")
        return cmd_campbell(s);
    if (name == "montecarlo")
        return cmd_montecarlo(s);
    if (name == "assign")
        return cmd_assign(s);
    throw ValidationError("run", "unknown command '" + name + "'");
}

} // namespace risdim
