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

#include "risdim/scenario.hpp"

#include "risdim/errors.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

namespace risdim {

double dbm_to_watts(double dbm)
{
    return std::pow(10.0, (dbm - 30.0) / 10.0);
}

double watts_to_dbm(double watts)
{
    return 10.0 * std::log10(watts) + 30.0;
}

std::vector<double> linspace(double start, double stop, std::size_t count)
{
    std::vector<double> out;
    if (count == 0)
        return out;
    if (count == 1)
        return {start};
    out.reserve(count);
    const double step = (stop - start) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i + 1 < count; ++i)
        out.push_back(start + step * static_cast<double>(i));
    out.push_back(stop);
    return out;
}

Scenario::Scenario() : p_grid(linspace(0.0, 1.0, 101)), q_grid(linspace(0.02, 0.48, 24)), run{"sweep", "campbell"}
{
}

ModelParams Scenario::model_params() const
{
    ModelParams p;
    p.S = S;
    p.los_ref = los_ref;
    p.los_exponent = los_exponent;
    p.Pt = dbm_to_watts(Pt_dBm);
    p.sigma2 = dbm_to_watts(sigma2_dBm);
    p.rho = rho;
    p.beta = beta;
    return p;
}

namespace {

void require(bool ok, const char* field, const std::string& what)
{
    if (!ok)
        throw ValidationError(field, what);
}

bool finite(double v)
{
    return std::isfinite(v);
}

const std::vector<std::string> kCommands = {"sweep", "campbell", "montecarlo", "assign"};

} // namespace

void Scenario::validate() const
{
    require(finite(r) && r > 0.0, "geometry.r", "must be positive");
    require(finite(z) && z > 0.0, "geometry.z", "must be positive");
    require(finite(corridor_length) && corridor_length >= 0.0, "geometry.corridor_length",
            "must be nonnegative (0 selects 2 r)");
    require(finite(rho) && rho >= 0.0, "density.rho", "must be nonnegative");
    require(finite(beta) && beta >= 0.0, "density.beta", "must be nonnegative");
    require(finite(S) && S >= 0.0, "model.S", "must be nonnegative");
    require(finite(los_ref) && los_ref >= 0.0, "model.los_ref", "must be nonnegative");
    require(finite(los_exponent) && los_exponent >= 0.0, "model.los_exponent", "must be nonnegative");
    require(finite(Pt_dBm), "model.Pt_dBm", "must be finite");
    require(finite(sigma2_dBm), "model.sigma2_dBm", "must be finite");
    require(elements_per_ris >= 1, "model.elements_per_ris", "must be at least 1");
    for (double p : p_grid)
        require(finite(p) && p >= 0.0 && p <= 1.0, "sweep.p_grid", "values must lie in [0, 1]");
    for (double q : q_grid)
        require(finite(q) && q > 0.0, "sweep.q_grid", "values must be positive");
    require(finite(q_min) && q_min > 0.0, "sweep.q_min", "must be positive");
    require(finite(q_max) && q_max > q_min, "sweep.q_max", "must exceed sweep.q_min");
    require(finite(quadrature_tol) && quadrature_tol > 0.0, "sweep.quadrature_tol", "must be positive");
    require(n_reps != 1, "montecarlo.n_reps", "must be 0 (disabled) or at least 2");
    if (P_star)
        require(finite(*P_star) && *P_star > 0.0, "assignment.P_star", "must be positive");
    if (calibration) {
        require(calibration->q > 0.0 && calibration->q < 0.5, "assignment.calibration.q", "must lie in (0, 1/2)");
        require(calibration->x >= 0.0 && calibration->x <= 1.0, "assignment.calibration.x", "must lie in [0, 1]");
    }
    for (const auto& pr : pairs)
        require(finite(pr.tx) && finite(pr.rx) && pr.tx != pr.rx, "assignment.pairs",
                "each pair needs distinct finite tx and rx");
    for (double y : ris_positions)
        require(finite(y), "assignment.ris_positions", "values must be finite");
    for (const auto& cmd : run)
        require(std::find(kCommands.begin(), kCommands.end(), cmd) != kCommands.end(), "run",
                "unknown command '" + cmd + "'");
}

namespace {

[[noreturn]] void fail_at(const YAML::Mark& m, const std::string& what)
{
    if (m.is_null())
        throw ParseError(what, 0, 0);
    throw ParseError(what, static_cast<std::size_t>(m.line) + 1, static_cast<std::size_t>(m.column) + 1);
}

void check_keys(const YAML::Node& map, const std::string& section, std::initializer_list<const char*> allowed)
{
    if (!map.IsMap())
        fail_at(map.Mark(), "section '" + section + "' must be a mapping");
    for (const auto& kv : map) {
        const auto key = kv.first.as<std::string>();
        const bool known = std::any_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; });
        if (!known)
            fail_at(kv.first.Mark(), "unknown key '" + key + "' in section '" + section + "'");
    }
}

template <class T>
T scalar(const YAML::Node& n, const std::string& field)
{
    if (!n.IsScalar())
        fail_at(n.Mark(), field + ": expected a scalar value");
    try {
        return n.as<T>();
    } catch (const YAML::Exception&) {
        fail_at(n.Mark(), field + ": cannot convert '" + n.Scalar() + "'");
    }
}

template <class T>
void read(const YAML::Node& section, const char* key, const std::string& prefix, T& out)
{
    if (const auto n = section[key])
        out = scalar<T>(n, prefix + "." + key);
}

std::vector<double> read_grid(const YAML::Node& n, const std::string& field)
{
    if (n.IsSequence()) {
        std::vector<double> out;
        for (const auto& v : n)
            out.push_back(scalar<double>(v, field));
        return out;
    }
    if (n.IsMap()) {
        check_keys(n, field, {"start", "stop", "count"});
        if (!n["start"] || !n["stop"] || !n["count"])
            fail_at(n.Mark(), field + ": range form needs start, stop and count");
        const auto count = scalar<std::size_t>(n["count"], field + ".count");
        return linspace(scalar<double>(n["start"], field + ".start"), scalar<double>(n["stop"], field + ".stop"),
                        count);
    }
    fail_at(n.Mark(), field + ": expected a list or a {start, stop, count} mapping");
}

std::vector<double> read_list(const YAML::Node& n, const std::string& field)
{
    if (!n.IsSequence())
        fail_at(n.Mark(), field + ": expected a list");
    std::vector<double> out;
    for (const auto& v : n)
        out.push_back(scalar<double>(v, field));
    return out;
}

} // namespace

Scenario parse_scenario_text(const std::string& text)
{
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::ParserException& e) {
        fail_at(e.mark, "malformed scenario: " + e.msg);
    }

    Scenario s;
    if (root.IsNull()) {
        s.validate();
        return s;
    }
    check_keys(root, "<root>", {"geometry", "density", "model", "sweep", "montecarlo", "assignment", "run"});

    if (const auto g = root["geometry"]) {
        check_keys(g, "geometry", {"r", "z", "corridor_length"});
        read(g, "r", "geometry", s.r);
        read(g, "z", "geometry", s.z);
        read(g, "corridor_length", "geometry", s.corridor_length);
    }
    if (const auto d = root["density"]) {
        check_keys(d, "density", {"rho", "beta"});
        read(d, "rho", "density", s.rho);
        read(d, "beta", "density", s.beta);
    }
    if (const auto m = root["model"]) {
        check_keys(m, "model", {"S", "los_ref", "los_exponent", "Pt_dBm", "sigma2_dBm", "elements_per_ris"});
        read(m, "S", "model", s.S);
        read(m, "los_ref", "model", s.los_ref);
        read(m, "los_exponent", "model", s.los_exponent);
        read(m, "Pt_dBm", "model", s.Pt_dBm);
        read(m, "sigma2_dBm", "model", s.sigma2_dBm);
        read(m, "elements_per_ris", "model", s.elements_per_ris);
    }
    if (const auto sw = root["sweep"]) {
        check_keys(sw, "sweep", {"p_grid", "q_grid", "q_min", "q_max", "quadrature_tol"});
        if (const auto n = sw["p_grid"])
            s.p_grid = read_grid(n, "sweep.p_grid");
        if (const auto n = sw["q_grid"])
            s.q_grid = read_grid(n, "sweep.q_grid");
        read(sw, "q_min", "sweep", s.q_min);
        read(sw, "q_max", "sweep", s.q_max);
        read(sw, "quadrature_tol", "sweep", s.quadrature_tol);
    }
    if (const auto mc = root["montecarlo"]) {
        check_keys(mc, "montecarlo", {"n_reps", "seed", "threads"});
        read(mc, "n_reps", "montecarlo", s.n_reps);
        read(mc, "seed", "montecarlo", s.seed);
        read(mc, "threads", "montecarlo", s.threads);
    }
    bool run_given = false;
    if (const auto a = root["assignment"]) {
        check_keys(a, "assignment", {"P_star", "calibration", "model", "left_edge", "pairs", "ris_positions"});
        if (const auto n = a["P_star"])
            s.P_star = scalar<double>(n, "assignment.P_star");
        if (const auto c = a["calibration"]) {
            check_keys(c, "assignment.calibration", {"q", "x"});
            Calibration cal;
            read(c, "q", "assignment.calibration", cal.q);
            read(c, "x", "assignment.calibration", cal.x);
            s.calibration = cal;
        }
        if (const auto n = a["model"]) {
            const auto v = scalar<std::string>(n, "assignment.model");
            if (v == "exact")
                s.power_model = PowerModel::exact;
            else if (v == "piecewise")
                s.power_model = PowerModel::piecewise;
            else
                fail_at(n.Mark(), "assignment.model: expected 'exact' or 'piecewise', got '" + v + "'");
        }
        if (const auto n = a["left_edge"]) {
            const auto v = scalar<std::string>(n, "assignment.left_edge");
            if (v == "extend")
                s.left_edge = LeftEdgePolicy::extend;
            else if (v == "clip")
                s.left_edge = LeftEdgePolicy::clip;
            else
                fail_at(n.Mark(), "assignment.left_edge: expected 'extend' or 'clip', got '" + v + "'");
        }
        if (const auto n = a["pairs"]) {
            if (!n.IsSequence())
                fail_at(n.Mark(), "assignment.pairs: expected a list of {tx, rx}");
            for (const auto& item : n) {
                check_keys(item, "assignment.pairs", {"tx", "rx"});
                if (!item["tx"] || !item["rx"])
                    fail_at(item.Mark(), "assignment.pairs: each pair needs tx and rx");
                s.pairs.push_back({scalar<double>(item["tx"], "assignment.pairs.tx"),
                                   scalar<double>(item["rx"], "assignment.pairs.rx")});
            }
        }
        if (const auto n = a["ris_positions"])
            s.ris_positions = read_list(n, "assignment.ris_positions");
    }
    if (const auto r = root["run"]) {
        if (!r.IsSequence())
            fail_at(r.Mark(), "run: expected a list of command names");
        s.run.clear();
        for (const auto& v : r)
            s.run.push_back(scalar<std::string>(v, "run"));
        run_given = true;
    }
    if (!run_given) {
        if (s.n_reps > 0)
            s.run.push_back("montecarlo");
        if (s.P_star || s.calibration)
            s.run.push_back("assign");
    }

    s.validate();
    return s;
}

Scenario parse_scenario(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open scenario file '" + path + "'", 0, 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario_text(buf.str());
}

std::string serialize_scenario(const Scenario& s)
{
    YAML::Emitter out;
    out.SetDoublePrecision(17);
    out << YAML::BeginMap;

    out << YAML::Key << "geometry" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "r" << YAML::Value << s.r;
    out << YAML::Key << "z" << YAML::Value << s.z;
    out << YAML::Key << "corridor_length" << YAML::Value << s.corridor_length;
    out << YAML::EndMap;

    out << YAML::Key << "density" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "rho" << YAML::Value << s.rho;
    out << YAML::Key << "beta" << YAML::Value << s.beta;
    out << YAML::EndMap;

    out << YAML::Key << "model" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "S" << YAML::Value << s.S;
    out << YAML::Key << "los_ref" << YAML::Value << s.los_ref;
    out << YAML::Key << "los_exponent" << YAML::Value << s.los_exponent;
    out << YAML::Key << "Pt_dBm" << YAML::Value << s.Pt_dBm;
    out << YAML::Key << "sigma2_dBm" << YAML::Value << s.sigma2_dBm;
    out << YAML::Key << "elements_per_ris" << YAML::Value << s.elements_per_ris;
    out << YAML::EndMap;

    out << YAML::Key << "sweep" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "p_grid" << YAML::Value << YAML::Flow << s.p_grid;
    out << YAML::Key << "q_grid" << YAML::Value << YAML::Flow << s.q_grid;
    out << YAML::Key << "q_min" << YAML::Value << s.q_min;
    out << YAML::Key << "q_max" << YAML::Value << s.q_max;
    out << YAML::Key << "quadrature_tol" << YAML::Value << s.quadrature_tol;
    out << YAML::EndMap;

    out << YAML::Key << "montecarlo" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "n_reps" << YAML::Value << s.n_reps;
    out << YAML::Key << "seed" << YAML::Value << s.seed;
    out << YAML::Key << "threads" << YAML::Value << s.threads;
    out << YAML::EndMap;

    out << YAML::Key << "assignment" << YAML::Value << YAML::BeginMap;
    if (s.P_star)
        out << YAML::Key << "P_star" << YAML::Value << *s.P_star;
    if (s.calibration) {
        out << YAML::Key << "calibration" << YAML::Value << YAML::Flow << YAML::BeginMap;
        out << YAML::Key << "q" << YAML::Value << s.calibration->q;
        out << YAML::Key << "x" << YAML::Value << s.calibration->x;
        out << YAML::EndMap;
    }
    out << YAML::Key << "model" << YAML::Value << std::string(to_string(s.power_model));
    out << YAML::Key << "left_edge" << YAML::Value << std::string(to_string(s.left_edge));
    out << YAML::Key << "pairs" << YAML::Value << YAML::BeginSeq;
    for (const auto& pr : s.pairs) {
        out << YAML::Flow << YAML::BeginMap;
        out << YAML::Key << "tx" << YAML::Value << pr.tx;
        out << YAML::Key << "rx" << YAML::Value << pr.rx;
        out << YAML::EndMap;
    }
    out << YAML::EndSeq;
    out << YAML::Key << "ris_positions" << YAML::Value << YAML::Flow << s.ris_positions;
    out << YAML::EndMap;

    out << YAML::Key << "run" << YAML::Value << YAML::Flow << s.run;
    out << YAML::EndMap;
    return std::string(out.c_str()) + "\n";
}

} // namespace risdim
