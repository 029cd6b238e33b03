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

// nfsim: near/far-field beam sweeps, SIR-constrained scheduling and the
// Fraunhofer diagnostic for a uniform planar transmit array.
//
// Exit codes: 0 success, 2 configuration error, 3 numerical-domain error.

#include <nearfield/nearfield.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace
{
    constexpr int exit_config = 2;
    constexpr int exit_domain = 3;

    struct CommonOptions
    {
        std::string config;
        std::string out;
        std::string format = "csv";
        std::optional<std::string> model;
        std::optional<double> frequency_hz;
        std::optional<int> nx, ny, quadrature_order;
        std::optional<double> element_side_over_lambda, spacing_over_lambda;
    };

    void add_common(CLI::App *cmd, CommonOptions &o)
    {
        cmd->add_option("--config", o.config, "Scenario file (key = value lines)");
        cmd->add_option("--out", o.out, "Output file (default: stdout)");
        cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--model", o.model, "Channel model")->check(CLI::IsMember({"exact", "near", "far"}));
        cmd->add_option("--frequency-hz", o.frequency_hz, "Carrier frequency [Hz]");
        cmd->add_option("--nx", o.nx, "Elements along X");
        cmd->add_option("--ny", o.ny, "Elements along Y");
        cmd->add_option("--element-side-over-lambda", o.element_side_over_lambda, "Patch side / wavelength");
        cmd->add_option("--spacing-over-lambda", o.spacing_over_lambda, "Element pitch / wavelength");
        cmd->add_option("--quadrature-order", o.quadrature_order, "Gauss-Legendre order per axis (exact model)");
    }

    nearfield::Scenario resolve_scenario(const CommonOptions &o)
    {
        nearfield::Scenario s;
        if (!o.config.empty())
        {
            std::ifstream in(o.config);
            if (!in)
                throw nearfield::config_error("cannot open config file '" + o.config + "'");
            s = nearfield::read_config(in, s, o.config);
        }
        if (o.model)
            s.model = nearfield::parse_model(*o.model);
        if (o.frequency_hz)
            s.frequency_hz = *o.frequency_hz;
        if (o.nx)
            s.nx = *o.nx;
        if (o.ny)
            s.ny = *o.ny;
        if (o.element_side_over_lambda)
            s.element_side_over_lambda = *o.element_side_over_lambda;
        if (o.spacing_over_lambda)
            s.spacing_over_lambda = *o.spacing_over_lambda;
        if (o.quadrature_order)
            s.quadrature_order = *o.quadrature_order;
        s.validate();
        return s;
    }

    // Writes `body` to --out or stdout.
    template <typename Writer>
    void emit(const std::string &path, Writer &&body)
    {
        if (path.empty())
        {
            body(std::cout);
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw nearfield::config_error("cannot open output file '" + path + "'");
        body(out);
    }

    std::string sibling(const std::string &path, const std::string &suffix)
    {
        const auto dot = path.find_last_of('.');
        const auto slash = path.find_last_of('/');
        const bool has_ext = dot != std::string::npos && (slash == std::string::npos || dot > slash);
        return (has_ext ? path.substr(0, dot) : path) + suffix;
    }

    nearfield::Vec3 parse_vec3(const std::string &text)
    {
        std::vector<double> v;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ','))
            v.push_back(nearfield::detail::parse_double(nearfield::detail::trim(item), "--focus"));
        if (v.size() != 3)
            throw nearfield::config_error("--focus: expected x,y,z");
        return {v[0], v[1], v[2]};
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"Near-field / far-field channel simulator for planar arrays"};
    app.require_subcommand(1);

    // beam-sweep
    CommonOptions sweep_opt;
    std::string axis = "z", plane = "yz", focus_text = "0,0,0.1";
    std::optional<double> start, stop;
    double radius = 0.0;
    int count = 101;
    auto *sweep_cmd = app.add_subcommand("beam-sweep", "Normalized MF beam power along a sweep, near vs far model");
    add_common(sweep_cmd, sweep_opt);
    sweep_cmd->add_option("--axis", axis, "Sweep axis: z (distance on +Z) or angle (arc at fixed radius)")
        ->check(CLI::IsMember({"z", "angle"}));
    sweep_cmd->add_option("--start", start, "First sweep value [m or deg]");
    sweep_cmd->add_option("--stop", stop, "Last sweep value [m or deg]");
    sweep_cmd->add_option("--count", count, "Number of sweep points (>= 2)");
    sweep_cmd->add_option("--focus", focus_text, "Beam focus x,y,z [m]");
    sweep_cmd->add_option("--radius", radius, "Arc radius for angle sweeps [m] (default |focus|)");
    sweep_cmd->add_option("--plane", plane, "Arc plane for angle sweeps")->check(CLI::IsMember({"xz", "yz"}));

    // schedule
    CommonOptions sched_opt;
    int users = 100, profile_points = 200;
    double d_min = 0.1, d_max = 10.0, gamma_db = 18.0;
    auto *sched_cmd = app.add_subcommand("schedule", "Closest-first SIR-constrained user selection on the Z axis");
    add_common(sched_cmd, sched_opt);
    sched_cmd->add_option("--k", users, "Number of candidate users");
    sched_cmd->add_option("--d-min", d_min, "Closest candidate distance [m]");
    sched_cmd->add_option("--d-max", d_max, "Farthest candidate distance [m]");
    sched_cmd->add_option("--gamma-db", gamma_db, "Pairwise SIR threshold [dB]");
    sched_cmd->add_option("--profile-points", profile_points, "Z-axis samples per power profile");

    // fraunhofer
    CommonOptions fr_opt;
    std::vector<double> fractions{0.01, 0.1, 1.0};
    int lobe_points = 81;
    auto *fr_cmd = app.add_subcommand("fraunhofer", "Fraunhofer distance and near/far gap at fractions of it");
    add_common(fr_cmd, fr_opt);
    fr_cmd->add_option("--fractions", fractions, "Fractions of the Fraunhofer distance")->delimiter(',');
    fr_cmd->add_option("--points", lobe_points, "Arc samples per plane");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::Success &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        app.exit(e);
        return exit_config;
    }

    try
    {
        if (*sweep_cmd)
        {
            const auto sc = resolve_scenario(sweep_opt);
            nearfield::SweepSpec sw;
            sw.focus = parse_vec3(focus_text);
            sw.count = count;
            sw.radius = radius;
            sw.plane = plane == "xz" ? nearfield::SweepPlane::xz : nearfield::SweepPlane::yz;
            if (axis == "z")
            {
                sw.axis = nearfield::SweepAxis::z_distance;
                sw.start = start.value_or(0.5 * sw.focus.norm());
                sw.stop = stop.value_or(2.0 * sw.focus.norm());
            }
            else
            {
                sw.axis = nearfield::SweepAxis::angle_at_radius;
                sw.start = start.value_or(-10.0);
                sw.stop = stop.value_or(10.0);
            }
            const auto res = nearfield::beam_sweep(sc, sw);
            emit(sweep_opt.out, [&](std::ostream &os)
                 {
                if (sweep_opt.format == "json")
                    os << nearfield::to_json(res).dump(2) << '\n';
                else
                    nearfield::write_csv(os, res); });
        }
        else if (*sched_cmd)
        {
            const auto sc = resolve_scenario(sched_opt);
            const auto rep = nearfield::run_schedule(sc, users, d_min, d_max, gamma_db, profile_points);
            if (sched_opt.format == "json")
                emit(sched_opt.out, [&](std::ostream &os)
                     { os << nearfield::to_json(rep).dump(2) << '\n'; });
            else
            {
                emit(sched_opt.out, [&](std::ostream &os)
                     { nearfield::write_csv(os, rep); });
                if (!sched_opt.out.empty())
                {
                    emit(sibling(sched_opt.out, ".sir_db.csv"), [&](std::ostream &os)
                         { nearfield::write_sir_csv(os, rep); });
                    emit(sibling(sched_opt.out, ".profiles.csv"), [&](std::ostream &os)
                         { nearfield::write_profiles_csv(os, rep); });
                }
            }
        }
        else if (*fr_cmd)
        {
            const auto sc = resolve_scenario(fr_opt);
            const auto rep = nearfield::run_fraunhofer(sc, fractions, lobe_points);
            emit(fr_opt.out, [&](std::ostream &os)
                 {
                if (fr_opt.format == "json")
                    os << nearfield::to_json(rep).dump(2) << '\n';
                else
                    nearfield::write_csv(os, rep); });
        }
    }
    catch (const nearfield::config_error &e)
    {
        std::cerr << "config error: " << e.what() << '\n';
        return exit_config;
    }
    catch (const nearfield::domain_error &e)
    {
        std::cerr << "domain error: " << e.what() << '\n';
        return exit_domain;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
