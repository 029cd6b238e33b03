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

#ifndef NEARFIELD_SCENARIO_HPP
#define NEARFIELD_SCENARIO_HPP

// Scenario configuration and its flat "key = value" text format.
//
//   # comment
//   frequency_hz = 30e9
//   nx = 20
//   model = near
//
// Keys are exactly the Scenario field names. Blank lines and '#' comments are ignored.

#include "array_model.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

namespace nearfield
{
    struct Scenario
    {
        double frequency_hz = 30e9;
        int nx = 20;
        int ny = 200;
        double element_side_over_lambda = 0.5;
        double spacing_over_lambda = 0.5;
        Model model = Model::near;
        int quadrature_order = 8;

        double wavelength() const { return speed_of_light / frequency_hz; }
        Medium medium() const { return Medium::from_frequency(frequency_hz); }

        TxArray array() const
        {
            const double lambda = wavelength();
            return build_array(nx, ny, element_side_over_lambda * lambda, spacing_over_lambda * lambda);
        }

        void validate() const
        {
            detail::require_config(frequency_hz > 0.0 && std::isfinite(frequency_hz), "frequency_hz: must be positive");
            detail::require_config(nx >= 1, "nx: must be >= 1");
            detail::require_config(ny >= 1, "ny: must be >= 1");
            detail::require_config(element_side_over_lambda > 0.0 && element_side_over_lambda <= 0.5,
                                   "element_side_over_lambda: must be in (0, 0.5]");
            detail::require_config(spacing_over_lambda > 0.0 && spacing_over_lambda <= 1.0,
                                   "spacing_over_lambda: must be in (0, 1]");
            detail::require_config(element_side_over_lambda <= spacing_over_lambda,
                                   "element_side_over_lambda: overlapping elements (exceeds spacing_over_lambda)");
            detail::require_config(quadrature_order >= 1, "quadrature_order: must be >= 1");
        }

        bool operator==(const Scenario &) const = default;
    };

    namespace detail
    {
        inline std::string_view trim(std::string_view s)
        {
            const auto b = s.find_first_not_of(" \t\r");
            if (b == std::string_view::npos)
                return {};
            const auto e = s.find_last_not_of(" \t\r");
            return s.substr(b, e - b + 1);
        }

        inline double parse_double(std::string_view v, const std::string &where)
        {
            // std::from_chars for double is available in libstdc++ 11
            double out = 0.0;
            const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
            if (ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(out))
                throw config_error(where + ": expected a number, got '" + std::string(v) + "'");
            return out;
        }

        inline int parse_int(std::string_view v, const std::string &where)
        {
            int out = 0;
            const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
            if (ec != std::errc() || ptr != v.data() + v.size())
                throw config_error(where + ": expected an integer, got '" + std::string(v) + "'");
            return out;
        }
    }

    // Apply one key/value pair. `where` prefixes error messages.
    inline void set_field(Scenario &s, std::string_view key, std::string_view value, const std::string &where)
    {
        const std::string at = where + "field '" + std::string(key) + "'";
        if (key == "frequency_hz")
            s.frequency_hz = detail::parse_double(value, at);
        else if (key == "nx")
            s.nx = detail::parse_int(value, at);
        else if (key == "ny")
            s.ny = detail::parse_int(value, at);
        else if (key == "element_side_over_lambda")
            s.element_side_over_lambda = detail::parse_double(value, at);
        else if (key == "spacing_over_lambda")
            s.spacing_over_lambda = detail::parse_double(value, at);
        else if (key == "model")
        {
            try
            {
                s.model = parse_model(value);
            }
            catch (const config_error &e)
            {
                throw config_error(at + ": " + e.what());
            }
        }
        else if (key == "quadrature_order")
            s.quadrature_order = detail::parse_int(value, at);
        else
            throw config_error(where + "unknown key '" + std::string(key) + "'");
    }

    // Reads a config on top of `base`. Does not validate the result.
    inline Scenario read_config(std::istream &in, Scenario base = {}, const std::string &source = "config")
    {
        std::string line;
        int lineno = 0;
        while (std::getline(in, line))
        {
            ++lineno;
            std::string_view sv = line;
            if (const auto hash = sv.find('#'); hash != std::string_view::npos)
                sv = sv.substr(0, hash);
            sv = detail::trim(sv);
            if (sv.empty())
                continue;
            const std::string where = source + ":" + std::to_string(lineno) + ": ";
            const auto eq = sv.find('=');
            if (eq == std::string_view::npos)
                throw config_error(where + "expected 'key = value'");
            const auto key = detail::trim(sv.substr(0, eq));
            const auto value = detail::trim(sv.substr(eq + 1));
            if (key.empty() || value.empty())
                throw config_error(where + "expected 'key = value'");
            set_field(base, key, value, where);
        }
        return base;
    }

    inline Scenario parse_config(const std::string &text, Scenario base = {})
    {
        std::istringstream in(text);
        return read_config(in, base);
    }

    inline void write_config(std::ostream &out, const Scenario &s)
    {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", s.frequency_hz);
        out << "frequency_hz = " << buf << '\n';
        out << "nx = " << s.nx << '\n';
        out << "ny = " << s.ny << '\n';
        std::snprintf(buf, sizeof buf, "%.17g", s.element_side_over_lambda);
        out << "element_side_over_lambda = " << buf << '\n';
        std::snprintf(buf, sizeof buf, "%.17g", s.spacing_over_lambda);
        out << "spacing_over_lambda = " << buf << '\n';
        out << "model = " << to_string(s.model) << '\n';
        out << "quadrature_order = " << s.quadrature_order << '\n';
    }
}

#endif
