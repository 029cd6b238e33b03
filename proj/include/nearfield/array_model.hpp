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

#ifndef NEARFIELD_ARRAY_MODEL_HPP
#define NEARFIELD_ARRAY_MODEL_HPP

#include "em_core.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace nearfield
{
    // Uniform planar array in the z = 0 plane, centered at the origin.
    // Element n = iy * nx + ix (row-major, x fastest).
    struct TxArray
    {
        int nx = 0;
        int ny = 0;
        double element_side = 0.0; // a [m]
        double spacing = 0.0;      // center-to-center pitch [m]
        std::vector<PatchElement> elements;

        std::size_t size() const { return elements.size(); }
    };

    inline TxArray build_array(int nx, int ny, double element_side, double spacing)
    {
        detail::require_config(nx >= 1 && ny >= 1, "array dimensions must be >= 1");
        detail::require_config(element_side > 0.0, "element side must be positive");
        detail::require_config(spacing > 0.0, "element spacing must be positive");
        detail::require_config(element_side <= spacing, "overlapping elements: element side exceeds spacing");

        TxArray arr{nx, ny, element_side, spacing, {}};
        arr.elements.reserve(static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny));
        const double ox = 0.5 * static_cast<double>(nx - 1);
        const double oy = 0.5 * static_cast<double>(ny - 1);
        for (int iy = 0; iy < ny; ++iy)
            for (int ix = 0; ix < nx; ++ix)
                arr.elements.push_back({Vec3((ix - ox) * spacing, (iy - oy) * spacing, 0.0), element_side});
        return arr;
    }

    // Span of element centers along X and Y, (n - 1) * spacing.
    inline std::pair<double, double> center_extent(const TxArray &arr)
    {
        return {(arr.nx - 1) * arr.spacing, (arr.ny - 1) * arr.spacing};
    }

    struct ChannelVector
    {
        ComplexVector entries;
        Model model = Model::near;
        Vec3 rx_position = Vec3::Zero();

        std::size_t size() const { return static_cast<std::size_t>(entries.size()); }
        double norm() const { return entries.norm(); }
    };

    inline ChannelVector channel_vector(const TxArray &arr, const Vec3 &r, const Medium &m, Model model,
                                        const GaussLegendre &rule)
    {
        ChannelVector g{ComplexVector(static_cast<Eigen::Index>(arr.size())), model, r};
        for (std::size_t n = 0; n < arr.size(); ++n)
        {
            const PatchElement &e = arr.elements[n];
            if (n == 0)
                validate(e, m);
            try
            {
                g.entries[static_cast<Eigen::Index>(n)] = element_field(r, e, m, model, rule);
            }
            catch (const domain_error &err)
            {
                throw domain_error("element " + std::to_string(n) + ": " + err.what());
            }
        }
        return g;
    }

    inline ChannelVector channel_vector(const TxArray &arr, const Vec3 &r, const Medium &m, Model model,
                                        int quadrature_order = 8)
    {
        // Only the exact model touches the rule.
        return channel_vector(arr, r, m, model, GaussLegendre(model == Model::exact ? quadrature_order : 1));
    }

    // Unit-power transmit excitation.
    struct Beamformer
    {
        ComplexVector weights;
        Vec3 focus = Vec3::Zero();
    };

    // J_n = conj(g_n) / ||g||
    inline Beamformer mf_beamformer(const ChannelVector &g)
    {
        const double nrm = g.norm();
        if (!(nrm > 0.0))
            throw domain_error("null channel, beamformer undefined");
        return {g.entries.conjugate() / nrm, g.rx_position};
    }

    // P = a^2 |sum_n J_n g_n|^2
    inline double received_power(const Beamformer &bf, const ChannelVector &g_eval, double element_side)
    {
        if (bf.weights.size() != g_eval.entries.size())
            throw config_error("length mismatch: beamformer has " + std::to_string(bf.weights.size()) +
                               " weights, channel has " + std::to_string(g_eval.entries.size()) + " entries");
        const complex field = (bf.weights.array() * g_eval.entries.array()).sum();
        return element_side * element_side * std::norm(field);
    }

    // Power at r_eval when the MF beamformer focuses on r_focus.
    inline double beam_power(const Vec3 &r_focus, const Vec3 &r_eval, const TxArray &arr, const Medium &m,
                             Model model, int quadrature_order = 8)
    {
        const GaussLegendre rule(model == Model::exact ? quadrature_order : 1);
        const Beamformer bf = mf_beamformer(channel_vector(arr, r_focus, m, model, rule));
        return received_power(bf, channel_vector(arr, r_eval, m, model, rule), arr.element_side);
    }

    // |g_hat(r)^H g_hat(r')|^2, in [0, 1].
    inline double focusing_gain(const ChannelVector &g, const ChannelVector &g_prime)
    {
        const double denom = g.norm() * g_prime.norm();
        if (!(denom > 0.0))
            throw domain_error("null channel, beamformer undefined");
        return std::norm(g.entries.dot(g_prime.entries)) / (denom * denom);
    }

    // Reference receiver used for dB normalization.
    inline Vec3 reference_position() { return {0.0, 0.0, 0.1}; }

    inline constexpr double db_floor = -200.0;

    struct DecibelValue
    {
        double db = 0.0;
        bool floored = false; // true if p <= 0 or below the reporting floor
    };

    // P_E(r_u, r_u) under the near-field model, r_u = (0, 0, 0.1 m).
    inline double reference_power(const TxArray &arr, const Medium &m)
    {
        return beam_power(reference_position(), reference_position(), arr, m, Model::near);
    }

    inline DecibelValue normalized_power_db(double p, double p_ref)
    {
        if (!(p_ref > 0.0))
            throw domain_error("reference power must be positive");
        if (!(p > 0.0))
            return {db_floor, true};
        const double db = 10.0 * std::log10(p / p_ref);
        if (db < db_floor)
            return {db_floor, true};
        return {db, false};
    }

    struct FraunhoferResult
    {
        double diameter_m = 0.0;
        double distance_m = 0.0; // 2 D^2 / lambda
    };

    // D is the diagonal of the physical aperture, element footprints included:
    // ((n - 1) * spacing + a) per axis. With a = spacing this is spacing * sqrt(nx^2 + ny^2).
    inline FraunhoferResult fraunhofer_distance(const TxArray &arr, const Medium &m)
    {
        const auto [ex, ey] = center_extent(arr);
        const double dx = ex + arr.element_side;
        const double dy = ey + arr.element_side;
        const double diameter = std::sqrt(dx * dx + dy * dy);
        return {diameter, 2.0 * diameter * diameter / m.wavelength_lambda};
    }
}

#endif
