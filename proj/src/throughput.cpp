// SPDX-License-Identifier: Apache-2.0
//
// relaysec: secrecy outage analysis for multi-antenna relay wiretap channels
// Copyright (C) 2026 The relaysec authors
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

#include "relaysec/throughput.hpp"
#include "relaysec/outage.hpp"
#include "relaysec/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace relaysec
{
    namespace
    {
        CodePoint splits(double beta_s, double beta_r, double r_b = 0.0, double r_e = 0.0)
        {
            CodePoint cp;
            cp.beta_s = beta_s;
            cp.beta_r = beta_r;
            cp.r_b = r_b;
            cp.r_e = r_e;
            return cp;
        }

        double p_so_at(const SystemConfig &cfg, double beta_s, double beta_r, double r_e, const SolverSettings &s)
        {
            return p_so(cfg, splits(beta_s, beta_r, r_e, r_e), s.quad).value;
        }
    }

    double throughput(const SystemConfig &cfg, const CodePoint &cp)
    {
        return std::max(0.0, (cp.r_b - cp.r_e) * (1.0 - p_to(cfg, cp).value));
    }

    double solve_re_star(const SystemConfig &cfg, double beta_s, double beta_r, double phi, const SolverSettings &settings)
    {
        validate(cfg, splits(beta_s, beta_r));
        if (!(phi > 0.0 && phi <= 1.0))
            throw Error(ErrorCode::violation, "phi", "VIOLATION(phi): phi must lie in (0, 1]");
        if (cfg.lambda == 0.0 || phi == 1.0)
            return 0.0;

        // P_so(0) = 1 > phi; find an upper bracket
        double lo = 0.0, hi = 1.0;
        int it = 0;
        while (p_so_at(cfg, beta_s, beta_r, hi, settings) >= phi)
        {
            lo = hi;
            hi *= 2.0;
            if (++it > 60)
                throw Error(ErrorCode::nonconverged, "r_e", "NONCONVERGED: no R_e brings P_so below phi");
        }
        for (int i = 0; i < settings.max_iterations; ++i)
        {
            const double mid = 0.5 * (lo + hi);
            const double p = p_so_at(cfg, beta_s, beta_r, mid, settings);
            if (std::abs(p - phi) <= settings.re_tol)
                return mid;
            (p > phi ? lo : hi) = mid;
            if (hi - lo <= 1e-15 * hi)
                break;
        }
        throw Error(ErrorCode::nonconverged, "r_e", "NONCONVERGED: R_e bisection budget exhausted");
    }

    double solve_rb_max(const SystemConfig &cfg, double beta_s, double beta_r, const SolverSettings &settings)
    {
        const double target = 1.0 - settings.to_margin;
        auto outage = [&](double r_b) { return p_to(cfg, splits(beta_s, beta_r, r_b, 0.0)).value; };
        double lo = 0.0, hi = 1.0;
        int it = 0;
        while (outage(hi) < target)
        {
            lo = hi;
            hi *= 2.0;
            if (++it > 60)
                throw Error(ErrorCode::nonconverged, "r_b", "NONCONVERGED: P_to never approaches 1");
        }
        for (int i = 0; i < settings.max_iterations && hi - lo > 1e-12 * hi; ++i)
        {
            const double mid = 0.5 * (lo + hi);
            (outage(mid) < target ? lo : hi) = mid;
        }
        return hi;
    }

    GoldenResult golden_section_max(const std::function<double(double)> &f, double a, double b, double tol, int max_iterations)
    {
        const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
        double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
        double fc = f(c), fd = f(d);
        for (int i = 0; i < max_iterations && b - a > tol; ++i)
        {
            if (fc >= fd) // Ties move left, toward the smaller argument
            {
                b = d;
                d = c;
                fd = fc;
                c = b - inv_phi * (b - a);
                fc = f(c);
            }
            else
            {
                a = c;
                c = d;
                fc = fd;
                d = a + inv_phi * (b - a);
                fd = f(d);
            }
        }
        return fc >= fd ? GoldenResult{c, fc} : GoldenResult{d, fd};
    }

    RateSolution solve_rates(const SystemConfig &cfg, double beta_s, double beta_r, double phi, const SolverSettings &settings)
    {
        RateSolution out;
        out.r_e = solve_re_star(cfg, beta_s, beta_r, phi, settings);
        out.r_b_max = std::max(solve_rb_max(cfg, beta_s, beta_r, settings), out.r_e);

        auto objective = [&](double r_b) { return throughput(cfg, splits(beta_s, beta_r, r_b, out.r_e)); };

        // Coarse unimodality check
        const int n = std::max(settings.coarse_points, 3);
        std::vector<double> x(n), y(n);
        for (int i = 0; i < n; ++i)
        {
            x[i] = out.r_e + (out.r_b_max - out.r_e) * i / (n - 1);
            y[i] = objective(x[i]);
        }
        int best = 0, peaks = 0;
        for (int i = 0; i < n; ++i)
        {
            if (y[i] > y[best])
                best = i;
            const bool left = i == 0 || y[i] > y[i - 1];
            const bool right = i == n - 1 || y[i] >= y[i + 1];
            if (left && right && y[i] > 0.0)
                ++peaks;
        }
        out.unimodal = peaks <= 1;

        double r_b = x[best], t_s = y[best];
        if (out.unimodal && out.r_b_max > out.r_e)
        {
            const auto g = golden_section_max(objective, x[std::max(best - 1, 0)], x[std::min(best + 1, n - 1)],
                                              settings.rb_tol, settings.max_iterations);
            if (g.fx > t_s)
            {
                r_b = g.x;
                t_s = g.fx;
            }
        }
        out.r_b = r_b;
        out.t_s = t_s;
        out.p_to = p_to(cfg, splits(beta_s, beta_r, r_b, out.r_e)).value;
        out.p_so = cfg.lambda == 0.0 ? 0.0 : p_so_at(cfg, beta_s, beta_r, out.r_e, settings);
        return out;
    }

    JointGrid default_joint_grid(const SystemConfig &cfg, int points)
    {
        if (points < 2)
            throw Error(ErrorCode::violation, "points", "VIOLATION(points): joint grid needs at least 2 points per axis");
        std::vector<double> axis;
        const double hi = std::log(0.95), lo = std::log(0.005);
        for (int i = 0; i < points - 1; ++i)
            axis.push_back(1.0 - std::exp(hi + (lo - hi) * i / (points - 2)));
        axis.push_back(1.0);
        JointGrid g;
        g.beta_s = cfg.n_s > 1 ? axis : std::vector<double>{1.0};
        g.beta_r = cfg.n_r > 1 ? axis : std::vector<double>{1.0};
        return g;
    }

    namespace
    {
        struct Cell
        {
            double beta_s, beta_r;
            RateSolution rates;
        };

        // Evaluates every (beta_s, beta_r) pair; result in input order
        std::vector<Cell> evaluate_cells(const SystemConfig &cfg, double phi, const std::vector<std::pair<double, double>> &pairs,
                                         const SolverSettings &settings)
        {
            std::vector<Cell> cells(pairs.size());
            parallel_for(std::int64_t(pairs.size()), settings.jobs, [&](std::int64_t begin, std::int64_t end)
                         {
                for (std::int64_t i = begin; i < end; ++i)
                    cells[i] = {pairs[i].first, pairs[i].second, solve_rates(cfg, pairs[i].first, pairs[i].second, phi, settings)}; });
            return cells;
        }

        // Strictly better throughput wins; ties go to smaller beta_s, beta_r, then R_b
        bool better(const Cell &a, const Cell &b)
        {
            if (a.rates.t_s != b.rates.t_s)
                return a.rates.t_s > b.rates.t_s;
            if (a.beta_s != b.beta_s)
                return a.beta_s < b.beta_s;
            if (a.beta_r != b.beta_r)
                return a.beta_r < b.beta_r;
            return a.rates.r_b < b.rates.r_b;
        }

        // Neighbours and midpoints of position i in a sorted axis
        std::vector<double> halved(const std::vector<double> &axis, std::size_t i)
        {
            std::vector<double> out;
            if (i > 0)
                out.insert(out.end(), {axis[i - 1], 0.5 * (axis[i - 1] + axis[i])});
            out.push_back(axis[i]);
            if (i + 1 < axis.size())
                out.insert(out.end(), {0.5 * (axis[i] + axis[i + 1]), axis[i + 1]});
            return out;
        }
    }

    ThroughputSolution solve_joint(const SystemConfig &cfg, double phi, const JointGrid &grid, const SolverSettings &settings)
    {
        if (grid.beta_s.empty() || grid.beta_r.empty())
            throw Error(ErrorCode::violation, "grid", "VIOLATION(grid): power-split grids must be nonempty");
        auto bs = grid.beta_s, br = grid.beta_r;
        std::sort(bs.begin(), bs.end());
        std::sort(br.begin(), br.end());

        std::vector<std::pair<double, double>> pairs;
        for (double s : bs)
            for (double r : br)
                pairs.emplace_back(s, r);
        auto cells = evaluate_cells(cfg, phi, pairs, settings);
        std::size_t best = 0;
        for (std::size_t i = 1; i < cells.size(); ++i)
            if (better(cells[i], cells[best]))
                best = i;
        bool unimodal = std::all_of(cells.begin(), cells.end(), [](const Cell &c) { return c.rates.unimodal; });

        Cell winner = cells[best];
        if (grid.refine)
        {
            const auto is = std::size_t(std::find(bs.begin(), bs.end(), winner.beta_s) - bs.begin());
            const auto ir = std::size_t(std::find(br.begin(), br.end(), winner.beta_r) - br.begin());
            std::vector<std::pair<double, double>> local;
            for (double s : halved(bs, is))
                for (double r : halved(br, ir))
                    if (std::find(pairs.begin(), pairs.end(), std::pair{s, r}) == pairs.end())
                        local.emplace_back(s, r);
            for (const auto &c : evaluate_cells(cfg, phi, local, settings))
            {
                unimodal = unimodal && c.rates.unimodal;
                if (better(c, winner))
                    winner = c;
            }
        }

        ThroughputSolution out;
        out.beta_s_star = winner.beta_s;
        out.beta_r_star = winner.beta_r;
        out.r_b_star = winner.rates.r_b;
        out.r_e_star = winner.rates.r_e;
        out.t_s = winner.rates.t_s;
        out.p_to_at_opt = winner.rates.p_to;
        out.p_so_at_opt = winner.rates.p_so;
        out.phi = phi;
        out.unimodal = unimodal;
        return out;
    }

    SplitOptimum optimize_split(const SystemConfig &cfg, SplitAxis axis, double fixed_beta, double phi,
                                const std::vector<double> &coarse, double beta_tol, const SolverSettings &settings)
    {
        if (coarse.empty())
            throw Error(ErrorCode::violation, "grid", "VIOLATION(grid): coarse split grid must be nonempty");
        auto grid = coarse;
        std::sort(grid.begin(), grid.end());
        auto solve = [&](double beta)
        {
            return axis == SplitAxis::source ? solve_rates(cfg, beta, fixed_beta, phi, settings)
                                             : solve_rates(cfg, fixed_beta, beta, phi, settings);
        };

        std::vector<RateSolution> values(grid.size());
        parallel_for(std::int64_t(grid.size()), settings.jobs, [&](std::int64_t begin, std::int64_t end)
                     {
            for (std::int64_t i = begin; i < end; ++i)
                values[i] = solve(grid[i]); });
        std::size_t best = 0;
        for (std::size_t i = 1; i < grid.size(); ++i)
            if (values[i].t_s > values[best].t_s)
                best = i;

        SplitOptimum out{grid[best], values[best]};
        if (grid.size() < 2)
            return out;
        const double a = grid[best > 0 ? best - 1 : 0], b = grid[std::min(best + 1, grid.size() - 1)];
        const auto g = golden_section_max([&](double beta) { return solve(beta).t_s; }, a, b, beta_tol, settings.max_iterations);
        if (g.fx > out.rates.t_s)
            out = {g.x, solve(g.x)};
        return out;
    }
}
