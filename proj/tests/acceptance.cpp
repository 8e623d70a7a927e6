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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
// All randomness uses master seed 1 (criterion 10 uses the CLI with --seed 42).

#include "relaysec/eaves_cdf.hpp"
#include "relaysec/experiment.hpp"
#include "relaysec/montecarlo.hpp"
#include "relaysec/outage.hpp"
#include "relaysec/quadrature.hpp"
#include "relaysec/throughput.hpp"
#include "relaysec/wishart.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#ifndef RELAYSEC_CLI_PATH
#error "RELAYSEC_CLI_PATH must name the CLI executable"
#endif

using namespace relaysec;

namespace
{
    constexpr std::uint64_t seed = 1;

    // Tolerances
    constexpr double j1_rel_tol = 1e-6;
    constexpr double eaves_ks_tol = 1e-2;
    constexpr std::int64_t eaves_ks_draws = 100000;
    constexpr double wishart_ks_tol = 5e-3;
    constexpr std::int64_t wishart_ks_draws = 1000000;
    constexpr double p_to_asym_tol = 1e-6;
    constexpr double p_so_asym_rel_tol = 1e-2;
    constexpr double phi = 0.4;
    constexpr double rb_grid_step = 1e-3;
    constexpr double p_so_phi_tol = 1e-4;

    struct Outcome
    {
        bool pass;
        std::string detail;
    };

    std::string fmt(double x)
    {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.4g", x);
        return buf;
    }

    SystemConfig fig3_config()
    {
        auto spec = scenario_defaults("fig3");
        SystemConfig cfg = spec.cfg;
        CodePoint cp = spec.cp;
        apply_parameter("gbar_e_db", 10.0, cfg, cp);
        return cfg;
    }

    SystemConfig fig4_config(int ns)
    {
        SystemConfig cfg = scenario_defaults("fig4").cfg;
        cfg.n_s = ns;
        return cfg;
    }

    SolverSettings tight_solver()
    {
        SolverSettings s;
        s.quad.rel_tol = 1e-10;
        s.quad.abs_tol = 1e-14;
        s.re_tol = 1e-8;
        s.rb_tol = 1e-8;
        return s;
    }

    // 1. Closed-form first-hop integral against direct quadrature
    Outcome criterion_j1()
    {
        const SystemConfig cfg = fig3_config();
        double worst = 0.0;
        for (double tau_db : {0.0, 6.0, 12.0, 18.0, 27.0})
            for (double beta : {0.05, 0.25, 0.5, 0.75, 1.0})
            {
                CodePoint cp;
                cp.r_e = threshold_to_rate(db_to_linear(tau_db));
                cp.r_b = cp.r_e + 1.0;
                cp.beta_s = beta;
                const double closed = j1_closed(cfg, cp);
                QuadratureSettings qs;
                qs.rel_tol = 1e-10;
                qs.abs_tol = 1e-14;
                const double oracle = integral_j1_oracle(cfg, cp, qs).value;
                worst = std::max(worst, std::abs(closed - oracle) / oracle);
            }
        return {worst <= j1_rel_tol, "25 points, max rel diff " + fmt(worst) + " (tol " + fmt(j1_rel_tol) + ")"};
    }

    // Shared by 2 and 3: analytic inside the 99% Wilson interval around MC
    struct CoverageCount
    {
        int inside = 0, total = 0;
    };

    void count(CoverageCount &c, double analytic, const OutageEstimate &mc)
    {
        const auto ci = mc::wilson_interval(mc.events, mc.trials, mc::z99);
        ++c.total;
        if (analytic >= ci.lo && analytic <= ci.hi)
            ++c.inside;
        else
            std::cout << "    outside: analytic " << fmt(analytic) << " interval [" << fmt(ci.lo) << ", " << fmt(ci.hi) << "]\n";
    }

    Outcome criterion_fig2()
    {
        const auto spec = scenario_defaults("fig2");
        CoverageCount c;
        for (double g : spec.series)
        {
            SystemConfig cfg = spec.cfg;
            CodePoint cp = spec.cp;
            apply_parameter("gbar_b_db", g, cfg, cp);
            std::vector<double> tau;
            for (double x : sweep_values(spec.from, spec.to, spec.step))
                tau.push_back(db_to_linear(x));
            mc::Settings s;
            s.trials = 100000;
            s.seed = seed;
            const auto curves = mc::estimate_outage_curves(cfg, cp, tau, {}, s);
            for (std::size_t i = 0; i < tau.size(); ++i)
            {
                CodePoint p = cp;
                p.r_b = threshold_to_rate(tau[i]);
                p.r_e = 0.0;
                count(c, p_to(cfg, p).value, curves.p_to[i]);
            }
        }
        return {c.inside == c.total, std::to_string(c.inside) + "/" + std::to_string(c.total) +
                                         " points inside the 99% interval, 1e5 trials"};
    }

    Outcome criterion_fig3()
    {
        const auto spec = scenario_defaults("fig3");
        SystemConfig cfg = spec.cfg;
        CodePoint cp = spec.cp;
        apply_parameter("gbar_e_db", 10.0, cfg, cp);
        std::vector<double> tau;
        for (double x : sweep_values(spec.from, spec.to, spec.step))
            tau.push_back(db_to_linear(x));
        cp.r_b = threshold_to_rate(tau.back());
        mc::Settings s;
        s.trials = 10000;
        s.seed = seed;
        const auto curves = mc::estimate_outage_curves(cfg, cp, {}, tau, s);
        CoverageCount c;
        for (std::size_t i = 0; i < tau.size(); ++i)
        {
            CodePoint p = cp;
            p.r_e = threshold_to_rate(tau[i]);
            count(c, p_so(cfg, p).value, curves.p_so[i]);
        }
        return {c.inside == c.total, std::to_string(c.inside) + "/" + std::to_string(c.total) +
                                         " points inside the 99% interval, 1e4 trials, R_sim " + fmt(curves.r_sim)};
    }

    // 4. Per-location eavesdropper SINR CDFs
    Outcome criterion_eaves_ks()
    {
        SystemConfig cfg = fig3_config();
        CodePoint cp;
        double worst = 0.0;
        for (auto [d, theta] : {std::pair{6.0, 0.7}, {14.0, 2.5}})
        {
            const auto geo = EavesGeometry::from_polar(cfg.d_sr, d, theta);
            const auto [si, ri] = mc::sample_eaves_sinrs(cfg, cp, geo, eaves_ks_draws, seed);
            const double k1 = mc::ks_distance(si, [&](double g) { return f_gamma_si(cfg, cp, geo, g); });
            const double k2 = mc::ks_distance(ri, [&](double g) { return f_gamma_ri(cfg, cp, geo, g); });
            worst = std::max({worst, k1, k2});
        }
        return {worst <= eaves_ks_tol, "2 locations x 2 hops, max KS " + fmt(worst) + " (tol " + fmt(eaves_ks_tol) + ")"};
    }

    // 5. Largest Wishart eigenvalue
    Outcome criterion_wishart_ks()
    {
        double worst = 0.0;
        for (auto [a, b] : {std::pair{1, 1}, {2, 2}, {2, 4}, {2, 8}})
        {
            const auto dims = WishartDims::from_antennas(a, b);
            const auto s = mc::sample_largest_eigenvalues(dims, wishart_ks_draws, seed);
            worst = std::max(worst, mc::ks_distance(s, [&](double x) { return largest_eig_cdf(dims, x); }));
        }
        return {worst <= wishart_ks_tol, "4 shapes, max KS " + fmt(worst) + " (tol " + fmt(wishart_ks_tol) + ")"};
    }

    // 6. Large-array limits
    Outcome criterion_asymptotic()
    {
        SystemConfig cfg = fig3_config();
        double worst_to = 0.0, worst_so = 0.0;
        cfg.n_s = 512;
        for (double rb : {0.5, 1.0, 2.0, 3.0, 4.0, 5.0})
        {
            CodePoint cp;
            cp.r_b = rb;
            cp.r_e = 0.0;
            worst_to = std::max(worst_to, std::abs(p_to(cfg, cp).value - p_to_asymptotic(cfg, cp).value));
        }
        cfg.n_s = 256;
        for (double tau_db : {0.0, 6.0, 12.0, 18.0})
        {
            CodePoint cp;
            cp.r_e = threshold_to_rate(db_to_linear(tau_db));
            cp.r_b = cp.r_e + 1.0;
            const double exact = p_so(cfg, cp).value, asym = p_so_asymptotic(cfg, cp).value;
            worst_so = std::max(worst_so, std::abs(exact - asym) / asym);
        }
        return {worst_to <= p_to_asym_tol && worst_so <= p_so_asym_rel_tol,
                "P_to abs diff " + fmt(worst_to) + " (tol " + fmt(p_to_asym_tol) + "), P_so rel diff " + fmt(worst_so) +
                    " (tol " + fmt(p_so_asym_rel_tol) + ")"};
    }

    // 7. Monotonicity over random configurations
    Outcome criterion_monotone()
    {
        std::mt19937_64 rng(seed);
        auto uni = [&](double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); };
        auto pick = [&](int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng); };
        int violations = 0, checks = 0;
        constexpr int grid = 50;
        for (int k = 0; k < 5; ++k)
        {
            SystemConfig cfg;
            cfg.n_e = pick(1, 3);
            cfg.n_s = pick(cfg.n_e + 1, 8);
            cfg.n_r = pick(1, 4);
            cfg.n_d = pick(1, 4);
            cfg.eta = uni(2.5, 4.5);
            cfg.lambda = std::pow(10.0, uni(-3.0, -1.5));
            cfg.d_sr = uni(5.0, 20.0);
            cfg.d_rd = uni(5.0, 20.0);
            cfg.p_s = db_to_linear(uni(0.0, 20.0)) * std::pow(cfg.d_sr, cfg.eta);
            cfg.p_r = db_to_linear(uni(0.0, 20.0)) * std::pow(cfg.d_rd, cfg.eta);
            cfg.sigma2_i1 = uni(0.5, 20.0);
            cfg.sigma2_i2 = uni(0.5, 20.0);
            const double bs = cfg.n_s > 1 ? uni(0.1, 1.0) : 1.0;
            const double br = cfg.n_r > 1 ? uni(0.1, 1.0) : 1.0;

            // Non-saturated ranges: 1e-6 < P < 1 - 1e-6
            const double re_lo = solve_re_star(cfg, bs, br, 1.0 - 1e-6);
            const double re_hi = solve_re_star(cfg, bs, br, 1e-6);
            const double rb_hi = solve_rb_max(cfg, bs, br);
            double prev = 2.0;
            for (int i = 0; i < grid; ++i)
            {
                CodePoint cp;
                cp.beta_s = bs;
                cp.beta_r = br;
                cp.r_e = std::max(re_lo + (re_hi - re_lo) * i / (grid - 1), 1e-9);
                cp.r_b = cp.r_e;
                const double v = p_so(cfg, cp).value;
                ++checks;
                if (v > prev)
                    ++violations;
                prev = v;
            }
            prev = -1.0;
            for (int i = 0; i < grid; ++i)
            {
                CodePoint cp;
                cp.beta_s = bs;
                cp.beta_r = br;
                cp.r_b = rb_hi * i / (grid - 1);
                cp.r_e = 0.0;
                const double v = p_to(cfg, cp).value;
                ++checks;
                if (v < prev)
                    ++violations;
                prev = v;
            }
        }
        return {violations == 0, std::to_string(violations) + " violations in " + std::to_string(checks) + " grid steps"};
    }

    // 8. Qualitative orderings of the optimized throughput
    Outcome criterion_orderings()
    {
        const std::vector<int> ns_values = {4, 8, 16};
        bool interior = true, ts_up = true;
        std::vector<double> ts;
        for (int ns : ns_values)
        {
            const SystemConfig cfg = fig4_config(ns);
            const double re = solve_re_star(cfg, 0.5, 0.5, phi);
            std::vector<double> curve;
            for (double rb : sweep_values(0.0, 7.0, 0.1))
            {
                CodePoint cp;
                cp.r_b = std::max(rb, re);
                cp.r_e = re;
                curve.push_back(throughput(cfg, cp));
            }
            const auto best = std::size_t(std::max_element(curve.begin(), curve.end()) - curve.begin());
            interior = interior && best > 0 && best + 1 < curve.size() && curve[best] > curve.front() &&
                       curve[best] > curve.back();
            ts.push_back(solve_rates(cfg, 0.5, 0.5, phi).t_s);
        }
        for (std::size_t i = 1; i < ts.size(); ++i)
            ts_up = ts_up && ts[i] > ts[i - 1];

        const auto coarse = sweep_values(0.05, 1.0, 0.05);
        std::vector<double> bs_star, br_star;
        for (int ns : ns_values)
        {
            const SystemConfig cfg = fig4_config(ns);
            bs_star.push_back(optimize_split(cfg, SplitAxis::source, 0.5, phi, coarse, 1e-4, tight_solver()).beta);
            br_star.push_back(optimize_split(cfg, SplitAxis::relay, 0.5, phi, coarse, 1e-4, tight_solver()).beta);
        }
        bool bs_down = true, br_up = true;
        for (std::size_t i = 1; i < ns_values.size(); ++i)
        {
            bs_down = bs_down && bs_star[i] < bs_star[i - 1];
            br_up = br_up && br_star[i] > br_star[i - 1];
        }

        const auto fig7 = scenario_defaults("fig7");
        bool lambda_down = true;
        std::vector<double> joint;
        for (int ns : ns_values)
        {
            double prev = std::numeric_limits<double>::infinity();
            for (double lambda : fig7.series)
            {
                SystemConfig cfg = fig4_config(ns);
                cfg.lambda = lambda;
                const double t = solve_joint(cfg, phi, default_joint_grid(cfg, fig7.joint_points)).t_s;
                joint.push_back(t);
                lambda_down = lambda_down && t < prev;
                prev = t;
            }
        }

        auto list = [](const std::vector<double> &v) {
            std::string s;
            for (double x : v)
                s += (s.empty() ? "" : ",") + fmt(x);
            return "[" + s + "]";
        };
        std::cout << "    fig4 interior maximum: " << (interior ? "yes" : "no") << ", T_s* over N_s=4,8,16 " << list(ts)
                  << (ts_up ? " increasing" : " NOT increasing") << "\n";
        std::cout << "    beta_s* " << list(bs_star) << (bs_down ? " decreasing" : " NOT decreasing") << "\n";
        std::cout << "    beta_r* " << list(br_star) << (br_up ? " increasing" : " NOT increasing") << "\n";
        std::cout << "    joint T_s* (N_s-major, lambda-minor) " << list(joint)
                  << (lambda_down ? " decreasing in lambda" : " NOT decreasing in lambda") << "\n";
        const int passed = int(interior && ts_up) + int(bs_down) + int(br_up) + int(lambda_down);
        return {passed == 4, std::to_string(passed) + "/4 orderings hold"};
    }

    // 9. Golden section against an exhaustive rate grid
    Outcome criterion_golden()
    {
        const SystemConfig cfg = fig4_config(4);
        const auto sol = solve_rates(cfg, 0.5, 0.5, phi);
        double best_t = 0.0, best_rb = 0.0;
        for (double rb = sol.r_e; rb <= sol.r_b_max; rb += rb_grid_step)
        {
            CodePoint cp;
            cp.r_b = rb;
            cp.r_e = sol.r_e;
            const double t = throughput(cfg, cp);
            if (t > best_t)
                best_t = t, best_rb = rb;
        }
        const bool ok_t = sol.t_s >= best_t * (1.0 - 1e-9);
        const bool ok_rb = std::abs(sol.r_b - best_rb) <= rb_grid_step;
        const bool ok_phi = std::abs(sol.p_so - phi) <= p_so_phi_tol;
        return {ok_t && ok_rb && ok_phi, "R_b* " + fmt(sol.r_b) + " vs grid " + fmt(best_rb) + ", T_s " + fmt(sol.t_s) +
                                             " vs grid " + fmt(best_t) + ", |P_so - phi| " +
                                             fmt(std::abs(sol.p_so - phi)) + " (tol " + fmt(p_so_phi_tol) + ")"};
    }

    // 10. CLI output is byte-identical across runs
    Outcome criterion_reproducible(const std::filesystem::path &dir)
    {
        std::filesystem::create_directories(dir);
        std::vector<std::string> outputs;
        for (const char *name : {"run_a.csv", "run_b.csv"})
        {
            const auto path = (dir / name).string();
            const std::string cmd = std::string("\"") + RELAYSEC_CLI_PATH + "\" figure fig3 --seed 42 --out \"" + path + "\"";
            if (std::system(cmd.c_str()) != 0)
                return {false, "CLI invocation failed: " + cmd};
            std::ifstream in(path, std::ios::binary);
            outputs.emplace_back(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
        }
        const bool same = !outputs[0].empty() && outputs[0] == outputs[1];
        return {same, std::to_string(outputs[0].size()) + " bytes, " + (same ? "identical" : "different")};
    }
}

int main(int argc, char **argv)
{
    const std::filesystem::path work = argc > 1 ? argv[1] : "acceptance_work";
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"C1 first-hop integral closed form vs quadrature", criterion_j1},
        {"C2 transmission outage vs Monte Carlo", criterion_fig2},
        {"C3 secrecy outage vs Monte Carlo", criterion_fig3},
        {"C4 eavesdropper SINR CDFs vs samples", criterion_eaves_ks},
        {"C5 largest Wishart eigenvalue CDF vs samples", criterion_wishart_ks},
        {"C6 large-array limits", criterion_asymptotic},
        {"C7 outage monotonicity", criterion_monotone},
        {"C8 throughput orderings", criterion_orderings},
        {"C9 rate optimizer vs exhaustive grid", criterion_golden},
        {"C10 CLI reproducibility", [&] { return criterion_reproducible(work); }},
    };

    int failures = 0;
    for (const auto &[name, fn] : criteria)
    {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o{false, ""};
        try
        {
            o = fn();
        }
        catch (const std::exception &e)
        {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << " [" << fmt(secs) << " s]" << std::endl;
        failures += o.pass ? 0 : 1;
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failures == 0 ? 0 : 1;
}
