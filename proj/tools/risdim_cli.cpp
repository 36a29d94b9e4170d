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

// risdim: figure data and RIS assignment for indoor SISO corridor links.
//
//   risdim sweep      [--scenario F] [overrides] [--out PATH] [--format csv|json]
//   risdim campbell   ...
//   risdim montecarlo ... [--seed N]
//   risdim assign     ... [--plan-out PATH]
//   risdim scenario run FILE [--out DIR]
//
// Errors are reported on stderr as a single JSON record and a nonzero exit code.

#include "risdim/commands.hpp"
#include "risdim/errors.hpp"
#include "risdim/scenario.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using nlohmann::json;

enum ExitCode : int { kOk = 0, kFailure = 1, kBadInput = 2, kModelError = 3 };

struct Overrides {
    std::string scenario_path;
    std::optional<double> r, z, rho, S;
    std::optional<std::uint64_t> n_reps;
};

struct GlobalOptions {
    std::optional<std::uint64_t> seed;
    std::string out;
    std::string plan_out;
    std::string format = "csv";
};

void add_overrides(CLI::App* cmd, Overrides& o)
{
    cmd->add_option("--scenario", o.scenario_path, "Scenario YAML file")->check(CLI::ExistingFile);
    cmd->add_option("--r", o.r, "Tx-Rx distance in meters");
    cmd->add_option("--z", o.z, "RIS height above the Tx-Rx line in meters");
    cmd->add_option("--rho", o.rho, "RIS line density per meter");
    cmd->add_option("--S", o.S, "RIS scattering constant");
    cmd->add_option("--n-reps", o.n_reps, "Monte Carlo replications");
}

risdim::Scenario load(const Overrides& o, const GlobalOptions& g)
{
    risdim::Scenario s = o.scenario_path.empty() ? risdim::Scenario{} : risdim::parse_scenario(o.scenario_path);
    if (o.r)
        s.r = *o.r;
    if (o.z)
        s.z = *o.z;
    if (o.rho)
        s.rho = *o.rho;
    if (o.S)
        s.S = *o.S;
    if (o.n_reps)
        s.n_reps = *o.n_reps;
    if (g.seed)
        s.seed = *g.seed;
    s.validate();
    return s;
}

void write_text(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot write '" + path + "'");
    f << text;
}

risdim::OutputFormat parse_format(const std::string& f)
{
    return f == "json" ? risdim::OutputFormat::json : risdim::OutputFormat::csv;
}

void emit(const risdim::CommandOutput& out, const GlobalOptions& g)
{
    const auto fmt = parse_format(g.format);
    write_text(g.out, risdim::render(out, fmt));
    if (out.plan && fmt == risdim::OutputFormat::csv) {
        std::string plan_path = g.plan_out;
        if (plan_path.empty() && !g.out.empty() && g.out != "-")
            plan_path = std::filesystem::path(g.out).replace_extension(".plan.json").string();
        write_text(plan_path, out.plan->dump(2) + "\n");
    }
}

void run_scenario_file(const std::string& file, const GlobalOptions& g)
{
    risdim::Scenario s = risdim::parse_scenario(file);
    if (g.seed) {
        s.seed = *g.seed;
        s.validate();
    }
    const auto fmt = parse_format(g.format);
    const std::string ext = fmt == risdim::OutputFormat::json ? ".json" : ".csv";
    const bool to_dir = !g.out.empty() && g.out != "-";
    if (to_dir)
        std::filesystem::create_directories(g.out);
    for (const auto& name : s.run) {
        const auto out = risdim::run_command(name, s);
        if (to_dir) {
            const auto base = std::filesystem::path(g.out) / name;
            write_text(base.string() + ext, risdim::render(out, fmt));
            if (out.plan && fmt == risdim::OutputFormat::csv)
                write_text(base.string() + ".plan.json", out.plan->dump(2) + "\n");
        } else {
            std::cout << risdim::render(out, fmt);
            if (out.plan && fmt == risdim::OutputFormat::csv)
                std::cout << out.plan->dump(2) << "\n";
        }
    }
}

int report(const std::string& kind, const std::string& message, int code, json extra = json::object())
{
    json err{{"kind", kind}, {"message", message}};
    for (auto& [k, v] : extra.items())
        err[k] = v;
    std::cerr << json{{"error", err}}.dump() << std::endl;
    return code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"RIS corridor dimensioning: power models, random deployments and RIS assignment"};
    app.require_subcommand(1);

    GlobalOptions g;
    app.add_option("--seed", g.seed, "Monte Carlo seed (overrides the scenario)");
    app.add_option("--out", g.out, "Output file (or directory for `scenario run`); stdout when omitted");
    app.add_option("--plan-out", g.plan_out, "Assignment plan JSON path (assign with CSV output)");
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}));

    Overrides o;
    auto* sweep = app.add_subcommand("sweep", "Single-RIS power and rates along the corridor");
    auto* campbell = app.add_subcommand("campbell", "Average power of Poisson deployments over a q grid");
    auto* montecarlo = app.add_subcommand("montecarlo", "Monte Carlo estimate against the closed form");
    auto* assign = app.add_subcommand("assign", "x*(q) curve and RIS assignment plan");
    for (auto* cmd : {sweep, campbell, montecarlo, assign}) {
        add_overrides(cmd, o);
        cmd->fallthrough();
    }

    auto* scenario = app.add_subcommand("scenario", "Scenario file operations");
    scenario->require_subcommand(1);
    std::string scenario_file;
    auto* scenario_run = scenario->add_subcommand("run", "Run every command listed in the scenario");
    scenario_run->add_option("file", scenario_file, "Scenario YAML file")->required()->check(CLI::ExistingFile);
    scenario->fallthrough();
    scenario_run->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return report("usage", e.what(), kBadInput);
    }

    try {
        if (scenario_run->parsed()) {
            run_scenario_file(scenario_file, g);
            return kOk;
        }
        const risdim::Scenario s = load(o, g);
        for (auto* cmd : {sweep, campbell, montecarlo, assign}) {
            if (cmd->parsed()) {
                emit(risdim::run_command(cmd->get_name(), s), g);
                break;
            }
        }
    } catch (const risdim::ParseError& e) {
        return report("parse_error", e.what(), kBadInput, json{{"line", e.line()}, {"column", e.column()}});
    } catch (const risdim::ValidationError& e) {
        return report("validation_error", e.what(), kBadInput, json{{"field", e.field()}});
    } catch (const risdim::InfeasibleTargetError& e) {
        return report("infeasible_target", e.what(), kModelError,
                      json{{"requested", e.requested()}, {"achievable", e.achievable()}});
    } catch (const risdim::DomainError& e) {
        return report("domain_error", e.what(), kModelError);
    } catch (const risdim::RangeError& e) {
        return report("range_error", e.what(), kModelError);
    } catch (const risdim::NonConvergenceError& e) {
        return report("non_convergence", e.what(), kModelError);
    } catch (const std::exception& e) {
        return report("failure", e.what(), kFailure);
    }
    return kOk;
}
