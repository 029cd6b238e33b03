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

#ifndef NEARFIELD_QUADRATURE_HPP
#define NEARFIELD_QUADRATURE_HPP

#include "constants.hpp"
#include "error.hpp"

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace nearfield
{
    // n-point Gauss-Legendre rule on [-1, 1]. Exact for polynomials of degree <= 2n-1.
    class GaussLegendre
    {
    public:
        explicit GaussLegendre(int order)
        {
            detail::require_config(order >= 1, "quadrature order must be >= 1, got " + std::to_string(order));

            const auto n = static_cast<std::size_t>(order);
            nodes_.resize(n);
            weights_.resize(n);

            // Newton iteration on P_n from the Chebyshev-like initial guess; roots are symmetric.
            const std::size_t half = (n + 1) / 2;
            for (std::size_t i = 0; i < half; ++i)
            {
                double x = std::cos(pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
                for (int iter = 0; iter < 100; ++iter)
                {
                    const auto [p, dp] = legendre(n, x);
                    const double dx = p / dp;
                    x -= dx;
                    if (std::abs(dx) < 1e-16)
                        break;
                }
                const double dp = legendre(n, x).second;
                const double w = 2.0 / ((1.0 - x * x) * dp * dp);

                nodes_[i] = -x;
                nodes_[n - 1 - i] = x;
                weights_[i] = w;
                weights_[n - 1 - i] = w;
            }
            if (n % 2 == 1)
                nodes_[n / 2] = 0.0;
        }

        int order() const { return static_cast<int>(nodes_.size()); }
        const std::vector<double> &nodes() const { return nodes_; }
        const std::vector<double> &weights() const { return weights_; }

        // Tensor-product integral of f(u, v) over the axis-aligned square
        // [cu - h, cu + h] x [cv - h, cv + h], h = side / 2.
        template <typename F>
        auto integrate_square(F &&f, double cu, double cv, double side) const
        {
            const double h = 0.5 * side;
            using R = decltype(f(cu, cv));
            R sum{};
            for (std::size_t a = 0; a < nodes_.size(); ++a)
            {
                R row{};
                for (std::size_t b = 0; b < nodes_.size(); ++b)
                    row += weights_[b] * f(cu + h * nodes_[a], cv + h * nodes_[b]);
                sum += weights_[a] * row;
            }
            return sum * (h * h);
        }

    private:
        // (P_n(x), P_n'(x)) by the three-term recurrence
        static std::pair<double, double> legendre(std::size_t n, double x)
        {
            double p0 = 1.0, p1 = x;
            for (std::size_t k = 2; k <= n; ++k)
            {
                const double kk = static_cast<double>(k);
                const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
                p0 = p1;
                p1 = p2;
            }
            return {p1, static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0)};
        }

        std::vector<double> nodes_;
        std::vector<double> weights_;
    };
}

#endif
