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

#ifndef RELAYSEC_THROUGHPUT_HPP
#define RELAYSEC_THROUGHPUT_HPP

#include "relaysec/model.hpp"
#include "relaysec/quadrature.hpp"

#include <functional>
#include <vector>

namespace relaysec
{
    struct SolverSettings
    {
        QuadratureSettings quad;
        double re_tol = 1e-4;        // |P_so - phi| at the returned R_e*
        double rb_tol = 1e-7;        // Golden-section bracket width in R_b
        double to_margin = 1e-6;     // R_b^max is where P_to reaches 1 - to_margin
        int coarse_points = 32;      // Unimodality check grid
        int max_iterations = 200;    // Per root search
        int jobs = 1;                // Grid cells evaluated concurrently

        bool operator==(const SolverSettings &) const = default;
    };

    // (R_b - R_e)(1 - P_to)
    double throughput(const SystemConfig &cfg, const CodePoint &cp);

    // R_e with P_so(R_e) = phi, by bisection. Returns 0 when the constraint is slack everywhere.
    double solve_re_star(const SystemConfig &cfg, double beta_s, double beta_r, double phi,
                         const SolverSettings &settings = {});

    // Smallest R_b (to bracket precision) with P_to >= 1 - to_margin
    double solve_rb_max(const SystemConfig &cfg, double beta_s, double beta_r, const SolverSettings &settings = {});

    struct RateSolution
    {
        double r_b = 0.0, r_e = 0.0;
        double t_s = 0.0;
        double p_to = 0.0, p_so = 0.0;
        double r_b_max = 0.0;
        bool unimodal = true; // False: coarse grid showed several local maxima, grid-best returned
    };

    // Best (R_b, R_e) for fixed power splits
    RateSolution solve_rates(const SystemConfig &cfg, double beta_s, double beta_r, double phi,
                             const SolverSettings &settings = {});

    struct ThroughputSolution
    {
        double r_b_star = 0.0, r_e_star = 0.0;
        double beta_s_star = 1.0, beta_r_star = 1.0;
        double t_s = 0.0;
        double p_so_at_opt = 0.0, p_to_at_opt = 0.0;
        double phi = 0.0;
        bool unimodal = true; // All contributing rate solves passed the unimodality check
    };

    struct JointGrid
    {
        std::vector<double> beta_s;
        std::vector<double> beta_r;
        bool refine = true; // One local halving around the best cell
    };

    // `points` values per axis: 1 - beta log-spaced from 0.95 down to 0.005, plus beta = 1.
    // An axis collapses to {1} when the node has a single antenna.
    JointGrid default_joint_grid(const SystemConfig &cfg, int points = 20);

    ThroughputSolution solve_joint(const SystemConfig &cfg, double phi, const JointGrid &grid,
                                   const SolverSettings &settings = {});

    // T_s* along one power split with the other fixed
    enum class SplitAxis
    {
        source,
        relay
    };

    struct SplitOptimum
    {
        double beta = 1.0;
        RateSolution rates;
    };

    // Coarse grid over beta, then golden section on the best bracket down to beta_tol
    SplitOptimum optimize_split(const SystemConfig &cfg, SplitAxis axis, double fixed_beta, double phi,
                                const std::vector<double> &coarse, double beta_tol, const SolverSettings &settings = {});

    struct GoldenResult
    {
        double x, fx;
    };

    // Maximizer of f on [a, b] by golden-section search to bracket width tol
    GoldenResult golden_section_max(const std::function<double(double)> &f, double a, double b, double tol,
                                    int max_iterations = 200);
}

#endif
