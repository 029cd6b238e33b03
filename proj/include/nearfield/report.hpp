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

#ifndef NEARFIELD_REPORT_HPP
#define NEARFIELD_REPORT_HPP

// CSV and JSON emission. Every output embeds the fully resolved scenario and a
// versioned schema tag. CSV files carry the scenario as leading '#' lines followed
// by exactly one header row.

#include "experiments.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

namespace nearfield
{
    inline constexpr const char *beam_sweep_schema = "nfsim.beam_sweep/1";
    inline constexpr const char *schedule_schema = "nfsim.schedule/1";
    inline constexpr const char *fraunhofer_schema = "nfsim.fraunhofer/1";

    namespace detail
    {
        inline std::string num(double v)
        {
            if (std::isinf(v))
                return v > 0 ? "inf" : "-inf";
            char buf[48];
            std::snprintf(buf, sizeof buf, "%.10g", v);
            return buf;
        }

        inline nlohmann::json vec_json(const Vec3 &v) { return nlohmann::json::array({v.x(), v.y(), v.z()}); }

        inline void scenario_comment(std::ostream &out, const Scenario &s)
        {
            std::ostringstream cfg;
            write_config(cfg, s);
            std::string line;
            std::istringstream in(cfg.str());
            while (std::getline(in, line))
                out << "# " << line << '\n';
        }

        inline std::string_view axis_name(SweepAxis a) { return a == SweepAxis::z_distance ? "z-distance" : "angle-at-radius"; }
        inline std::string_view plane_name(SweepPlane p) { return p == SweepPlane::xz ? "xz" : "yz"; }
    }

    inline nlohmann::json to_json(const Scenario &s)
    {
        return {{"frequency_hz", s.frequency_hz},
                {"wavelength_m", s.wavelength()},
                {"nx", s.nx},
                {"ny", s.ny},
                {"element_side_over_lambda", s.element_side_over_lambda},
                {"spacing_over_lambda", s.spacing_over_lambda},
                {"model", std::string(to_string(s.model))},
                {"quadrature_order", s.quadrature_order}};
    }

    inline nlohmann::json to_json(const SweepSpec &sw)
    {
        nlohmann::json j{{"axis", std::string(detail::axis_name(sw.axis))},
                         {"start", sw.start},
                         {"stop", sw.stop},
                         {"count", sw.count},
                         {"focus_m", detail::vec_json(sw.focus)}};
        if (sw.axis == SweepAxis::angle_at_radius)
        {
            j["radius_m"] = sw.effective_radius();
            j["plane"] = std::string(detail::plane_name(sw.plane));
        }
        return j;
    }

    // ---- beam sweep

    inline nlohmann::json to_json(const BeamSweepResult &r)
    {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t i = 0; i < r.rows.size(); ++i)
        {
            const auto &row = r.rows[i];
            rows.push_back({{"index", i},
                            {"position_m", detail::vec_json(row.position)},
                            {"near_db", row.near_db.db},
                            {"far_db", row.far_db.db},
                            {"gap_db", row.gap_db},
                            {"model_db", row.model_db.db},
                            {"floored", row.near_db.floored || row.far_db.floored || row.model_db.floored}});
        }
        return {{"schema", beam_sweep_schema},
                {"scenario", to_json(r.scenario)},
                {"sweep", to_json(r.sweep)},
                {"reference_position_m", detail::vec_json(reference_position())},
                {"reference_power", r.reference_power},
                {"rows", rows}};
    }

    inline void write_csv(std::ostream &out, const BeamSweepResult &r)
    {
        out << "# schema: " << beam_sweep_schema << '\n';
        detail::scenario_comment(out, r.scenario);
        out << "# sweep: axis=" << detail::axis_name(r.sweep.axis) << " start=" << detail::num(r.sweep.start)
            << " stop=" << detail::num(r.sweep.stop) << " count=" << r.sweep.count
            << " focus=" << detail::num(r.sweep.focus.x()) << ';' << detail::num(r.sweep.focus.y()) << ';'
            << detail::num(r.sweep.focus.z());
        if (r.sweep.axis == SweepAxis::angle_at_radius)
            out << " radius=" << detail::num(r.sweep.effective_radius()) << " plane=" << detail::plane_name(r.sweep.plane);
        out << '\n';
        out << "# reference_power = " << detail::num(r.reference_power) << '\n';
        out << "index,x_m,y_m,z_m,near_db,far_db,gap_db,model_db,floored\n";
        for (std::size_t i = 0; i < r.rows.size(); ++i)
        {
            const auto &row = r.rows[i];
            out << i << ',' << detail::num(row.position.x()) << ',' << detail::num(row.position.y()) << ','
                << detail::num(row.position.z()) << ',' << detail::num(row.near_db.db) << ','
                << detail::num(row.far_db.db) << ',' << detail::num(row.gap_db) << ','
                << detail::num(row.model_db.db) << ','
                << ((row.near_db.floored || row.far_db.floored || row.model_db.floored) ? 1 : 0) << '\n';
        }
    }

    // ---- schedule

    // Minimum pairwise SIR among the selected users; +inf for fewer than two.
    inline double min_selected_sir(const ScheduleResult &r)
    {
        double lo = std::numeric_limits<double>::infinity();
        for (std::size_t a = 0; a < r.selected.size(); ++a)
            for (std::size_t b = a + 1; b < r.selected.size(); ++b)
                lo = std::min(lo, r.sir_matrix(static_cast<Eigen::Index>(r.selected[a]),
                                               static_cast<Eigen::Index>(r.selected[b])));
        return lo;
    }

    inline nlohmann::json to_json(const ScheduleReport &rep)
    {
        using nlohmann::json;
        const auto &res = rep.result;
        json selected = json::array();
        for (std::size_t idx : res.selected)
            selected.push_back({{"index", idx},
                                {"position_m", detail::vec_json(rep.users.positions[idx])},
                                {"distance_m", rep.users.positions[idx].norm()}});

        // JSON has no infinity; orthogonal pairs are emitted as null.
        json sir_db = json::array();
        for (Eigen::Index i = 0; i < res.sir_matrix.rows(); ++i)
        {
            json row = json::array();
            for (Eigen::Index l = 0; l < res.sir_matrix.cols(); ++l)
            {
                const double v = res.sir_matrix(i, l);
                row.push_back(std::isinf(v) ? json(nullptr) : json(linear_to_db(v)));
            }
            sir_db.push_back(row);
        }

        json profiles = json::array();
        for (const auto &p : rep.profiles)
        {
            json db = json::array();
            bool floored = false;
            for (const auto &v : p.power_db)
            {
                db.push_back(v.db);
                floored = floored || v.floored;
            }
            profiles.push_back({{"user_index", p.user_index}, {"z_m", p.z_m}, {"power_db", db}, {"floored", floored}});
        }

        const double min_sir = min_selected_sir(res);
        return {{"schema", schedule_schema},
                {"scenario", to_json(rep.scenario)},
                {"users", {{"k", rep.k}, {"d_min_m", rep.d_min}, {"d_max_m", rep.d_max}, {"grid", "z-axis, equally spaced, endpoints inclusive"}}},
                {"channel_model", std::string(to_string(rep.scenario.model))},
                {"gamma_db", rep.gamma_db},
                {"gamma_linear", res.gamma},
                {"iterations", res.iterations},
                {"selected_count", res.selected.size()},
                {"selected", selected},
                {"min_selected_sir_db", std::isinf(min_sir) ? json(nullptr) : json(linear_to_db(min_sir))},
                {"sir_db", sir_db},
                {"profiles", profiles}};
    }

    // Selected users, one row each.
    inline void write_csv(std::ostream &out, const ScheduleReport &rep)
    {
        const auto &res = rep.result;
        out << "# schema: " << schedule_schema << '\n';
        detail::scenario_comment(out, rep.scenario);
        out << "# users: k=" << rep.k << " d_min=" << detail::num(rep.d_min) << " d_max=" << detail::num(rep.d_max)
            << " grid=z-axis-equally-spaced-inclusive\n";
        out << "# gamma_db = " << detail::num(rep.gamma_db) << '\n';
        out << "# selected_count = " << res.selected.size() << '\n';
        out << "rank,index,x_m,y_m,z_m,distance_m,min_sir_db_to_selected\n";
        for (std::size_t a = 0; a < res.selected.size(); ++a)
        {
            const std::size_t idx = res.selected[a];
            double lo = std::numeric_limits<double>::infinity();
            for (std::size_t other : res.selected)
                if (other != idx)
                    lo = std::min(lo, res.sir_matrix(static_cast<Eigen::Index>(idx), static_cast<Eigen::Index>(other)));
            const Vec3 &p = rep.users.positions[idx];
            out << a << ',' << idx << ',' << detail::num(p.x()) << ',' << detail::num(p.y()) << ','
                << detail::num(p.z()) << ',' << detail::num(p.norm()) << ','
                << detail::num(std::isinf(lo) ? lo : linear_to_db(lo)) << '\n';
        }
    }

    // Full K x K pairwise SIR matrix in dB.
    inline void write_sir_csv(std::ostream &out, const ScheduleReport &rep)
    {
        const auto &s = rep.result.sir_matrix;
        out << "# schema: " << schedule_schema << " sir_db\n";
        out << "index";
        for (Eigen::Index l = 0; l < s.cols(); ++l)
            out << ",u" << l;
        out << '\n';
        for (Eigen::Index i = 0; i < s.rows(); ++i)
        {
            out << i;
            for (Eigen::Index l = 0; l < s.cols(); ++l)
                out << ',' << detail::num(std::isinf(s(i, l)) ? s(i, l) : linear_to_db(s(i, l)));
            out << '\n';
        }
    }

    inline void write_profiles_csv(std::ostream &out, const ScheduleReport &rep)
    {
        out << "# schema: " << schedule_schema << " profiles\n";
        out << "user_index,z_m,power_db,floored\n";
        for (const auto &p : rep.profiles)
            for (std::size_t i = 0; i < p.z_m.size(); ++i)
                out << p.user_index << ',' << detail::num(p.z_m[i]) << ',' << detail::num(p.power_db[i].db) << ','
                    << (p.power_db[i].floored ? 1 : 0) << '\n';
    }

    // ---- fraunhofer

    inline nlohmann::json to_json(const FraunhoferReport &rep)
    {
        nlohmann::json gaps = nlohmann::json::array();
        for (const auto &g : rep.gaps)
            gaps.push_back({{"fraction", g.fraction},
                            {"distance_m", g.distance_m},
                            {"max_gap_db", g.gap.max_db()},
                            {"gap_xz_db", g.gap.xz_db},
                            {"gap_yz_db", g.gap.yz_db}});
        return {{"schema", fraunhofer_schema},
                {"scenario", to_json(rep.scenario)},
                {"diameter_m", rep.boundary.diameter_m},
                {"fraunhofer_distance_m", rep.boundary.distance_m},
                {"gap_sweep", "central-lobe arcs in xz and yz at the focus radius, focus on +Z"},
                {"gaps", gaps}};
    }

    inline void write_csv(std::ostream &out, const FraunhoferReport &rep)
    {
        out << "# schema: " << fraunhofer_schema << '\n';
        detail::scenario_comment(out, rep.scenario);
        out << "diameter_m,fraunhofer_distance_m,fraction,distance_m,max_gap_db,gap_xz_db,gap_yz_db\n";
        for (const auto &g : rep.gaps)
            out << detail::num(rep.boundary.diameter_m) << ',' << detail::num(rep.boundary.distance_m) << ','
                << detail::num(g.fraction) << ',' << detail::num(g.distance_m) << ',' << detail::num(g.gap.max_db())
                << ',' << detail::num(g.gap.xz_db) << ',' << detail::num(g.gap.yz_db) << '\n';
    }
}

#endif
