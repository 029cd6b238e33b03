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

#ifndef NEARFIELD_EXPERIMENTS_HPP
#define NEARFIELD_EXPERIMENTS_HPP

// Beam sweeps, user scheduling runs and the Fraunhofer diagnostic on top of a Scenario.

#include "multiaccess.hpp"
#include "scenario.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace nearfield
{
    enum class SweepAxis
    {
        z_distance,     // r' = (0, 0, d')
        angle_at_radius // r' on an arc of fixed radius, angle from +Z in degrees
    };

    enum class SweepPlane
    {
        xz,
        yz
    };

    struct SweepSpec
    {
        SweepAxis axis = SweepAxis::z_distance;
        double start = 0.05;
        double stop = 0.2;
        int count = 101;
        Vec3 focus{0.0, 0.0, 0.1};
        double radius = 0.0; // angle sweeps; <= 0 means |focus|
        SweepPlane plane = SweepPlane::yz;

        void validate() const
        {
            detail::require_config(count >= 2, "sweep count must be >= 2");
            detail::require_config(start < stop, "sweep start must be < stop");
            detail::require_config(focus.allFinite(), "sweep focus must be finite");
            if (axis == SweepAxis::z_distance)
                detail::require_config(start > 0.0, "z sweep must start at a positive distance");
            else
                detail::require_config(start >= -90.0 && stop <= 90.0, "angle sweep must lie within [-90, 90] degrees");
        }

        double effective_radius() const { return radius > 0.0 ? radius : focus.norm(); }

        std::vector<Vec3> positions() const
        {
            std::vector<Vec3> out;
            out.reserve(static_cast<std::size_t>(count));
            for (int i = 0; i < count; ++i)
            {
                const double t = start + (stop - start) * static_cast<double>(i) / (count - 1);
                if (axis == SweepAxis::z_distance)
                    out.emplace_back(0.0, 0.0, t);
                else
                {
                    const double th = t * pi / 180.0, rad = effective_radius();
                    if (plane == SweepPlane::xz)
                        out.emplace_back(rad * std::sin(th), 0.0, rad * std::cos(th));
                    else
                        out.emplace_back(0.0, rad * std::sin(th), rad * std::cos(th));
                }
            }
            return out;
        }
    };

    struct SweepRow
    {
        Vec3 position;
        DecibelValue near_db;
        DecibelValue far_db;
        DecibelValue model_db; // scenario's selected model
        double gap_db = 0.0;   // |near - far|
    };

    struct BeamSweepResult
    {
        Scenario scenario;
        SweepSpec sweep;
        double reference_power = 0.0;
        std::vector<SweepRow> rows;
    };

    // MF-focused power along a sweep, normalized to the near-field power at (0, 0, 0.1 m).
    class BeamEvaluator
    {
    public:
        BeamEvaluator(const TxArray &arr, const Medium &m, Model model, const Vec3 &focus, int quadrature_order = 8)
            : arr_(&arr), medium_(m), model_(model), rule_(model == Model::exact ? quadrature_order : 1),
              bf_(mf_beamformer(channel_vector(arr, focus, m, model, rule_)))
        {
        }

        double power(const Vec3 &r_eval) const
        {
            return received_power(bf_, channel_vector(*arr_, r_eval, medium_, model_, rule_), arr_->element_side);
        }

    private:
        const TxArray *arr_;
        Medium medium_;
        Model model_;
        GaussLegendre rule_;
        Beamformer bf_;
    };

    inline BeamSweepResult beam_sweep(const Scenario &sc, const SweepSpec &sweep)
    {
        sc.validate();
        sweep.validate();
        const Medium m = sc.medium();
        const TxArray arr = sc.array();
        const double p_ref = reference_power(arr, m);

        const BeamEvaluator near(arr, m, Model::near, sweep.focus);
        const BeamEvaluator far(arr, m, Model::far, sweep.focus);
        const BeamEvaluator selected(arr, m, sc.model, sweep.focus, sc.quadrature_order);

        BeamSweepResult res{sc, sweep, p_ref, {}};
        for (const Vec3 &r : sweep.positions())
        {
            SweepRow row;
            row.position = r;
            row.near_db = normalized_power_db(near.power(r), p_ref);
            row.far_db = normalized_power_db(far.power(r), p_ref);
            row.model_db = sc.model == Model::near  ? row.near_db
                           : sc.model == Model::far ? row.far_db
                                                    : normalized_power_db(selected.power(r), p_ref);
            row.gap_db = std::abs(row.near_db.db - row.far_db.db);
            res.rows.push_back(row);
        }
        return res;
    }

    struct LobeGap
    {
        double xz_db = 0.0;
        double yz_db = 0.0;
        double max_db() const { return std::max(xz_db, yz_db); }
    };

    // Largest |near - far| normalized-power gap over the central lobe of an arc at the focus
    // radius, focus on the Z axis. The lobe is |sin(theta)| < lambda / (n * spacing) per plane,
    // the first null of the aperture along that axis, capped at 80 degrees.
    inline LobeGap central_lobe_gap(const Scenario &sc, double focus_distance, int points = 81)
    {
        sc.validate();
        detail::require_config(points >= 3, "central lobe sweep needs at least 3 points");
        const Medium m = sc.medium();
        const TxArray arr = sc.array();
        const Vec3 focus(0.0, 0.0, focus_distance);
        const BeamEvaluator near(arr, m, Model::near, focus);
        const BeamEvaluator far(arr, m, Model::far, focus);

        auto plane_gap = [&](SweepPlane plane, int n)
        {
            const double s_max = std::min(m.wavelength_lambda / (n * arr.spacing), std::sin(80.0 * pi / 180.0));
            const double th_max = std::asin(s_max);
            double worst = 0.0;
            // open interval: skip the endpoints sitting on the first nulls
            for (int i = 1; i <= points; ++i)
            {
                const double th = -th_max + 2.0 * th_max * static_cast<double>(i) / (points + 1);
                const Vec3 r = plane == SweepPlane::xz
                                   ? Vec3(focus_distance * std::sin(th), 0.0, focus_distance * std::cos(th))
                                   : Vec3(0.0, focus_distance * std::sin(th), focus_distance * std::cos(th));
                const double pn = near.power(r), pf = far.power(r);
                worst = std::max(worst, std::abs(10.0 * std::log10(pn / pf)));
            }
            return worst;
        };
        return {plane_gap(SweepPlane::xz, arr.nx), plane_gap(SweepPlane::yz, arr.ny)};
    }

    // Largest |near - far| gap on the Z axis over [d / 2, 2 d], focus at (0, 0, d).
    inline double axial_gap(const Scenario &sc, double focus_distance, int points = 121)
    {
        SweepSpec sw;
        sw.axis = SweepAxis::z_distance;
        sw.start = 0.5 * focus_distance;
        sw.stop = 2.0 * focus_distance;
        sw.count = points;
        sw.focus = Vec3(0.0, 0.0, focus_distance);
        const auto res = beam_sweep(Scenario{sc}, sw);
        double worst = 0.0;
        for (const auto &row : res.rows)
            worst = std::max(worst, row.gap_db);
        return worst;
    }

    struct PowerProfile
    {
        std::size_t user_index = 0;
        std::vector<double> z_m;
        std::vector<DecibelValue> power_db;
    };

    struct ScheduleReport
    {
        Scenario scenario;
        int k = 0;
        double d_min = 0.0;
        double d_max = 0.0;
        double gamma_db = 0.0;
        UserSet users;
        ScheduleResult result;
        std::vector<PowerProfile> profiles;
    };

    inline ScheduleReport run_schedule(const Scenario &sc, int k, double d_min, double d_max, double gamma_db,
                                       int profile_points = 200)
    {
        sc.validate();
        detail::require_config(std::isfinite(gamma_db), "gamma_db must be finite");
        detail::require_config(profile_points >= 2, "profile point count must be >= 2");
        const Medium m = sc.medium();
        const TxArray arr = sc.array();

        ScheduleReport rep{sc, k, d_min, d_max, gamma_db, users_on_z_axis(k, d_min, d_max), {}, {}};
        rep.result = heuristic_select(rep.users, gamma_db, arr, m, sc.model);

        // 0 dB at the selected user closest to the transmitter, its own beam.
        std::size_t closest = rep.result.selected.front();
        for (std::size_t idx : rep.result.selected)
            if (rep.users.positions[idx].norm() < rep.users.positions[closest].norm())
                closest = idx;
        const Vec3 &rc = rep.users.positions[closest];
        const double p_ref = BeamEvaluator(arr, m, sc.model, rc, sc.quadrature_order).power(rc);

        for (std::size_t idx : rep.result.selected)
        {
            const BeamEvaluator beam(arr, m, sc.model, rep.users.positions[idx], sc.quadrature_order);
            PowerProfile prof;
            prof.user_index = idx;
            for (int i = 0; i < profile_points; ++i)
            {
                const double z = d_min + (d_max - d_min) * static_cast<double>(i) / (profile_points - 1);
                prof.z_m.push_back(z);
                prof.power_db.push_back(normalized_power_db(beam.power(Vec3(0.0, 0.0, z)), p_ref));
            }
            rep.profiles.push_back(std::move(prof));
        }
        return rep;
    }

    struct FraunhoferGap
    {
        double fraction = 0.0;
        double distance_m = 0.0;
        LobeGap gap;
    };

    struct FraunhoferReport
    {
        Scenario scenario;
        FraunhoferResult boundary;
        std::vector<FraunhoferGap> gaps;
    };

    inline FraunhoferReport run_fraunhofer(const Scenario &sc, const std::vector<double> &fractions = {0.01, 0.1, 1.0},
                                           int points = 81)
    {
        sc.validate();
        FraunhoferReport rep{sc, fraunhofer_distance(sc.array(), sc.medium()), {}};
        for (double f : fractions)
        {
            detail::require_config(f > 0.0, "Fraunhofer fractions must be positive");
            const double d = f * rep.boundary.distance_m;
            rep.gaps.push_back({f, d, central_lobe_gap(sc, d, points)});
        }
        return rep;
    }
}

#endif
