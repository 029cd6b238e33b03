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

#ifndef NEARFIELD_EM_CORE_HPP
#define NEARFIELD_EM_CORE_HPP

// Point-to-point propagation kernels for a Y-polarized planar transmitter:
// the full dyadic Green's function of a homogeneous medium, its radiating
// (1/r) near-field truncation and the planar-wavefront far-field model.

#include "constants.hpp"
#include "error.hpp"
#include "geometry.hpp"
#include "quadrature.hpp"

#include <cmath>
#include <string>
#include <string_view>

namespace nearfield
{
    // Homogeneous, lossless propagation medium at a single carrier.
    struct Medium
    {
        double impedance_eta = free_space_impedance; // [Ohm]
        double wavelength_lambda = 0.0;              // [m]
        double frequency_f = 0.0;                    // [Hz]

        static Medium from_frequency(double frequency_hz, double eta = free_space_impedance)
        {
            detail::require_config(frequency_hz > 0.0 && std::isfinite(frequency_hz), "frequency must be positive");
            Medium m{eta, speed_of_light / frequency_hz, frequency_hz};
            m.validate();
            return m;
        }

        // Mostly for tests and hand calculations with round wavelengths.
        static Medium from_wavelength(double wavelength_m, double eta = free_space_impedance)
        {
            detail::require_config(wavelength_m > 0.0 && std::isfinite(wavelength_m), "wavelength must be positive");
            Medium m{eta, wavelength_m, speed_of_light / wavelength_m};
            m.validate();
            return m;
        }

        double wavenumber() const { return two_pi / wavelength_lambda; }

        void validate() const
        {
            detail::require_config(impedance_eta > 0.0, "impedance must be positive");
            detail::require_config(wavelength_lambda > 0.0, "wavelength must be positive");
            detail::require_config(frequency_f > 0.0, "frequency must be positive");
        }
    };

    enum class Model
    {
        exact,
        near,
        far
    };

    inline std::string_view to_string(Model m)
    {
        switch (m)
        {
        case Model::exact:
            return "exact";
        case Model::near:
            return "near";
        case Model::far:
            return "far";
        }
        return "unknown";
    }

    inline Model parse_model(std::string_view s)
    {
        if (s == "exact")
            return Model::exact;
        if (s == "near")
            return Model::near;
        if (s == "far")
            return Model::far;
        throw config_error("unknown model '" + std::string(s) + "' (expected exact|near|far)");
    }

    // Square patch in the plane z = center.z, normal +Z, Y-polarized.
    struct PatchElement
    {
        Vec3 center = Vec3::Zero();
        double side = 0.0; // [m]
    };

    inline void validate(const PatchElement &elem, const Medium &medium)
    {
        detail::require_config(elem.side > 0.0, "element side must be positive");
        detail::require_config(elem.side <= 0.5 * medium.wavelength_lambda * (1.0 + 1e-12),
                               "element side exceeds half a wavelength");
    }

    // The three dyadic terms of the Green's function, common prefactor included.
    // radiating ~ 1/r, induction ~ 1/r^2, quasi_static ~ 1/r^3.
    struct GreenTerms
    {
        Dyad radiating;
        Dyad induction;
        Dyad quasi_static;

        Dyad sum() const { return radiating + induction + quasi_static; }
    };

    namespace detail
    {
        inline double checked_norm(const Vec3 &x)
        {
            const double r = x.norm();
            if (!(r > 0.0))
                throw domain_error("singular displacement: kernel undefined at the source point");
            return r;
        }

        // -j eta exp(-j 2 pi r / lambda) / (2 lambda)
        inline complex green_prefactor(double r, const Medium &m)
        {
            return -imag_unit * m.impedance_eta * std::polar(1.0, -two_pi * (r / m.wavelength_lambda)) /
                   (2.0 * m.wavelength_lambda);
        }

        // yy-entry of the radiating term; shared by the dyad, the near kernel
        // and the far kernel so the term-dropping identities hold bit-for-bit.
        inline complex radiating_yy(const Vec3 &x, const Medium &m)
        {
            const double r = checked_norm(x);
            const double y_hat = x.y() / r;
            const complex scale = green_prefactor(r, m) * (1.0 / r);
            return scale * complex(1.0 - y_hat * y_hat, 0.0);
        }
    }

    inline GreenTerms green_exact_terms(const Vec3 &x, const Medium &m)
    {
        const double r = detail::checked_norm(x);
        const Vec3 x_hat = x / r;
        const Eigen::Matrix3d outer = x_hat * x_hat.transpose();
        const Eigen::Matrix3d transverse = Eigen::Matrix3d::Identity() - outer;
        const Eigen::Matrix3d longitudinal = Eigen::Matrix3d::Identity() - 3.0 * outer;

        const double lambda = m.wavelength_lambda;
        const complex pre = detail::green_prefactor(r, m);
        const complex c1 = pre * (1.0 / r);
        const complex c2 = pre * (imag_unit * lambda / (two_pi * r * r));
        const complex c3 = pre * (-(lambda * lambda) / (4.0 * pi * pi * r * r * r));

        return {c1 * transverse.cast<complex>(),
                c2 * longitudinal.cast<complex>(),
                c3 * longitudinal.cast<complex>()};
    }

    // Full dyadic Green's function G0(x), x = r - s.
    inline Dyad green_exact(const Vec3 &x, const Medium &m)
    {
        return green_exact_terms(x, m).sum();
    }

    // yy-entry of green_exact without forming the 3x3 dyad.
    inline complex green_exact_yy(const Vec3 &x, const Medium &m)
    {
        const double r = detail::checked_norm(x);
        const double y2 = (x.y() / r) * (x.y() / r);
        const double lambda = m.wavelength_lambda;
        const complex bracket = (1.0 - y2) / r +
                                imag_unit * lambda / (two_pi * r * r) * (1.0 - 3.0 * y2) -
                                lambda * lambda / (4.0 * pi * pi * r * r * r) * (1.0 - 3.0 * y2);
        return detail::green_prefactor(r, m) * bracket;
    }

    // Near-field kernel: yy-component of the radiating term at r - s.
    inline complex kernel_near(const Vec3 &r, const Vec3 &s, const Medium &m)
    {
        return detail::radiating_yy(r - s, m);
    }

    // Far-field kernel: first-order expansion of |r - s| around s = 0.
    // Amplitude depends on r only; s enters through exp(+j k r_hat . s).
    inline complex kernel_far(const Vec3 &r, const Vec3 &s, const Medium &m)
    {
        const complex base = detail::radiating_yy(r, m);
        const Vec3 r_hat = r / r.norm();
        return base * std::polar(1.0, m.wavenumber() * r_hat.dot(s));
    }

    inline bool on_patch_surface(const Vec3 &r, const PatchElement &elem)
    {
        const double h = 0.5 * elem.side;
        return r.z() == elem.center.z() &&
               std::abs(r.x() - elem.center.x()) <= h &&
               std::abs(r.y() - elem.center.y()) <= h;
    }

    // g_n(r): integral of the chosen kernel over the patch surface.
    // Exact integrates the Green's function yy-entry with a tensor Gauss-Legendre rule;
    // Near and Far use the constant-field closed form a^2 * kernel(r, center).
    inline complex element_field(const Vec3 &r, const PatchElement &elem, const Medium &m, Model model,
                                 const GaussLegendre &rule)
    {
        if (on_patch_surface(r, elem))
            throw domain_error("singular displacement: receiver lies on the patch surface");

        const double area = elem.side * elem.side;
        switch (model)
        {
        case Model::near:
            return area * kernel_near(r, elem.center, m);
        case Model::far:
            return area * kernel_far(r, elem.center, m);
        case Model::exact:
        {
            const double cz = elem.center.z();
            return rule.integrate_square(
                [&](double u, double v)
                { return green_exact_yy(r - Vec3(u, v, cz), m); },
                elem.center.x(), elem.center.y(), elem.side);
        }
        }
        throw config_error("unknown model");
    }

    inline complex element_field(const Vec3 &r, const PatchElement &elem, const Medium &m, Model model,
                                 int quadrature_order = 8)
    {
        return element_field(r, elem, m, model, GaussLegendre(quadrature_order));
    }
}

#endif
