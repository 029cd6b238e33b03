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

#ifndef NEARFIELD_MULTIACCESS_HPP
#define NEARFIELD_MULTIACCESS_HPP

// Pairwise-SIR user scheduling along a common angular direction.

#include "array_model.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace nearfield
{
    struct UserSet
    {
        std::vector<Vec3> positions;

        std::size_t size() const { return positions.size(); }
    };

    // K users at (0, 0, d), d equally spaced over [d_min, d_max] inclusive.
    inline UserSet users_on_z_axis(int k, double d_min, double d_max)
    {
        detail::require_config(k >= 1, "user count must be >= 1");
        detail::require_config(d_min > 0.0 && d_min < d_max, "need 0 < d_min < d_max");
        UserSet u;
        u.positions.reserve(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i)
        {
            const double d = (k == 1) ? d_min : d_min + (d_max - d_min) * static_cast<double>(i) / (k - 1);
            u.positions.emplace_back(0.0, 0.0, d);
        }
        return u;
    }

    inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
    inline double linear_to_db(double x) { return 10.0 * std::log10(x); }

    // SIR(l, k) = |g_hat_k^H g_hat_l|^-2 >= 1.
    // Symmetric bit-for-bit: the real part is a commutative sum and the two halves of
    // the imaginary part swap roles, so exchanging arguments only flips its sign.
    // Orthogonal channels return +infinity.
    inline double sir(const ChannelVector &g_k, const ChannelVector &g_l)
    {
        if (g_k.size() != g_l.size())
            throw config_error("length mismatch between channel vectors");
        const ComplexVector &a = g_k.entries;
        const ComplexVector &b = g_l.entries;
        double re = 0.0, im_ab = 0.0, im_ba = 0.0, na = 0.0, nb = 0.0;
        for (Eigen::Index n = 0; n < a.size(); ++n)
        {
            const double ar = a[n].real(), ai = a[n].imag();
            const double br = b[n].real(), bi = b[n].imag();
            re += ar * br + ai * bi;
            im_ab += ar * bi;
            im_ba += ai * br;
            na += ar * ar + ai * ai;
            nb += br * br + bi * bi;
        }
        if (!(na > 0.0) || !(nb > 0.0))
            throw domain_error("null channel, SIR undefined");
        const double im = im_ab - im_ba;
        const double overlap = re * re + im * im;
        if (overlap == 0.0)
            return std::numeric_limits<double>::infinity();
        return std::max(1.0, (na * nb) / overlap);
    }

    // K x K linear SIR values, unit diagonal, computed once per pair and mirrored.
    inline Eigen::MatrixXd sir_matrix(const std::vector<ChannelVector> &channels)
    {
        const auto k = static_cast<Eigen::Index>(channels.size());
        Eigen::MatrixXd s = Eigen::MatrixXd::Ones(k, k);
        for (Eigen::Index i = 0; i < k; ++i)
            for (Eigen::Index l = i + 1; l < k; ++l)
                s(i, l) = s(l, i) = sir(channels[static_cast<std::size_t>(i)], channels[static_cast<std::size_t>(l)]);
        return s;
    }

    // Undirected compatibility graph; edge (k, l) iff SIR(l, k) > gamma.
    class SirGraph
    {
    public:
        SirGraph() = default;

        SirGraph(std::vector<std::vector<bool>> adjacency, double gamma)
            : k_(adjacency.size()), adj_(std::move(adjacency)), gamma_(gamma)
        {
            for (std::size_t i = 0; i < k_; ++i)
            {
                detail::require_config(adj_[i].size() == k_, "adjacency matrix must be square");
                detail::require_config(!adj_[i][i], "adjacency diagonal must be false");
                for (std::size_t l = 0; l < i; ++l)
                    detail::require_config(adj_[i][l] == adj_[l][i], "adjacency matrix must be symmetric");
            }
        }

        static SirGraph from_sir(const Eigen::MatrixXd &sir_values, double gamma)
        {
            const auto k = static_cast<std::size_t>(sir_values.rows());
            std::vector<std::vector<bool>> adj(k, std::vector<bool>(k, false));
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t l = 0; l < k; ++l)
                    adj[i][l] = (i != l) && sir_values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(l)) > gamma;
            return SirGraph(std::move(adj), gamma);
        }

        std::size_t size() const { return k_; }
        double gamma() const { return gamma_; }
        bool adjacent(std::size_t a, std::size_t b) const { return adj_[a][b]; }
        const std::vector<std::vector<bool>> &adjacency() const { return adj_; }

        std::size_t edge_count() const
        {
            std::size_t e = 0;
            for (std::size_t i = 0; i < k_; ++i)
                for (std::size_t l = i + 1; l < k_; ++l)
                    e += adj_[i][l] ? 1 : 0;
            return e;
        }

        bool is_clique(const std::vector<std::size_t> &nodes) const
        {
            for (std::size_t i = 0; i < nodes.size(); ++i)
                for (std::size_t l = i + 1; l < nodes.size(); ++l)
                    if (!adj_[nodes[i]][nodes[l]])
                        return false;
            return true;
        }

    private:
        std::size_t k_ = 0;
        std::vector<std::vector<bool>> adj_;
        double gamma_ = 1.0;
    };

    inline std::vector<ChannelVector> user_channels(const UserSet &users, const TxArray &arr, const Medium &m,
                                                    Model model, int quadrature_order = 8)
    {
        const GaussLegendre rule(model == Model::exact ? quadrature_order : 1);
        std::vector<ChannelVector> out;
        out.reserve(users.size());
        for (std::size_t i = 0; i < users.size(); ++i)
        {
            try
            {
                out.push_back(channel_vector(arr, users.positions[i], m, model, rule));
            }
            catch (const domain_error &err)
            {
                throw domain_error("user " + std::to_string(i) + ": " + err.what());
            }
        }
        return out;
    }

    inline void validate(const UserSet &users)
    {
        detail::require_config(users.size() >= 1, "user set must not be empty");
        for (std::size_t i = 0; i < users.size(); ++i)
            for (std::size_t l = i + 1; l < users.size(); ++l)
                detail::require_config(users.positions[i] != users.positions[l],
                                       "user positions " + std::to_string(i) + " and " + std::to_string(l) +
                                           " coincide");
    }

    // Scheduling channels use the near-field kernel unless told otherwise.
    inline SirGraph build_graph(const UserSet &users, double gamma_db, const TxArray &arr, const Medium &m,
                                Model model = Model::near)
    {
        validate(users);
        return SirGraph::from_sir(sir_matrix(user_channels(users, arr, m, model)), db_to_linear(gamma_db));
    }

    struct ScheduleResult
    {
        std::vector<std::size_t> selected; // in selection order
        Eigen::MatrixXd sir_matrix;        // linear
        double gamma = 1.0;                // linear
        std::size_t iterations = 0;
    };

    // Greedy selection: repeatedly take the remaining node with the smallest priority
    // (lowest index on ties) and drop every remaining node not adjacent to it.
    inline std::vector<std::size_t> greedy_clique(const SirGraph &graph, const std::vector<double> &priority,
                                                  std::size_t *iterations = nullptr)
    {
        detail::require_config(priority.size() == graph.size(), "priority length must match graph size");
        std::vector<bool> alive(graph.size(), true);
        std::size_t remaining = graph.size();
        std::vector<std::size_t> chosen;
        std::size_t iters = 0;
        while (remaining > 0)
        {
            ++iters;
            std::size_t best = graph.size();
            for (std::size_t i = 0; i < graph.size(); ++i)
                if (alive[i] && (best == graph.size() || priority[i] < priority[best]))
                    best = i;
            chosen.push_back(best);
            // The chosen node itself leaves S: SIR(x, x) = 1 <= gamma for gamma >= 1, and
            // it is removed unconditionally so the loop also terminates for gamma < 1.
            for (std::size_t i = 0; i < graph.size(); ++i)
                if (alive[i] && (i == best || !graph.adjacent(best, i)))
                {
                    alive[i] = false;
                    --remaining;
                }
        }
        if (iterations)
            *iterations = iters;
        return chosen;
    }

    // Closest-first heuristic user selection.
    inline ScheduleResult heuristic_select(const UserSet &users, double gamma_db, const TxArray &arr,
                                           const Medium &m, Model model = Model::near)
    {
        validate(users);
        ScheduleResult res;
        res.gamma = db_to_linear(gamma_db);
        res.sir_matrix = sir_matrix(user_channels(users, arr, m, model));

        const SirGraph graph = SirGraph::from_sir(res.sir_matrix, res.gamma);
        std::vector<double> dist(users.size());
        for (std::size_t i = 0; i < users.size(); ++i)
            dist[i] = users.positions[i].norm();
        res.selected = greedy_clique(graph, dist, &res.iterations);
        return res;
    }

    inline constexpr std::size_t exact_clique_cap = 25;

    // Maximum clique by branch and bound over bitsets. Deterministic: candidates are
    // expanded in increasing index order and the first maximum found is kept.
    inline std::vector<std::size_t> exact_max_clique(const SirGraph &graph)
    {
        const std::size_t k = graph.size();
        if (k > exact_clique_cap)
            throw config_error("instance too large for exact oracle: K = " + std::to_string(k) +
                               " exceeds " + std::to_string(exact_clique_cap));
        if (k == 0)
            return {};

        std::vector<std::uint32_t> nbr(k, 0);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t l = 0; l < k; ++l)
                if (graph.adjacent(i, l))
                    nbr[i] |= (std::uint32_t{1} << l);

        std::uint32_t best = 0;
        int best_size = 0;

        auto expand = [&](auto &&self, std::uint32_t current, int size, std::uint32_t candidates) -> void
        {
            if (candidates == 0)
            {
                if (size > best_size)
                {
                    best_size = size;
                    best = current;
                }
                return;
            }
            while (candidates != 0)
            {
                if (size + std::popcount(candidates) <= best_size)
                    return;
                const int v = std::countr_zero(candidates);
                const std::uint32_t bit = std::uint32_t{1} << v;
                self(self, current | bit, size + 1, candidates & nbr[static_cast<std::size_t>(v)]);
                candidates &= ~bit;
            }
        };
        const std::uint32_t all = (k == 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << k) - 1);
        expand(expand, 0, 0, all);

        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < k; ++i)
            if (best & (std::uint32_t{1} << i))
                out.push_back(i);
        return out;
    }
}

#endif
