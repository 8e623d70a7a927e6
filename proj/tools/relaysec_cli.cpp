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

#include "relaysec/experiment.hpp"
#include "relaysec/montecarlo.hpp"
#include "relaysec/outage.hpp"
#include "relaysec/throughput.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace relaysec;

namespace
{
    // Optional overrides; unset ones keep the scenario defaults
    struct Overrides
    {
        std::optional<int> n_s, n_r, n_d, n_e;
        std::optional<double> eta, lambda, d_sr, d_rd, p_s, p_r, sigma2_r, sigma2_d, sigma2_i1, sigma2_i2;
        std::optional<double> r_b, r_e, beta_s, beta_r;
        std::optional<std::uint64_t> seed;
        std::optional<std::int64_t> trials;
        std::optional<double> rel_tol, phi, r_sim, from, to, step;
        std::optional<std::vector<double>> gbar_db, series;
        std::optional<std::string> series_var, sweep, metric;
        std::optional<bool> mc, asymptotic;
        std::optional<int> joint_points;
        int jobs = 1;
        std::string out;
        std::string scenario = "custom";
        std::string figure;
    };

    template <typename T, typename U>
    void set_if(const std::optional<T> &value, U &target)
    {
        if (value)
            target = *value;
    }

    void apply(const Overrides &o, SystemConfig &cfg, CodePoint &cp)
    {
        set_if(o.n_s, cfg.n_s), set_if(o.n_r, cfg.n_r), set_if(o.n_d, cfg.n_d), set_if(o.n_e, cfg.n_e);
        set_if(o.eta, cfg.eta), set_if(o.lambda, cfg.lambda), set_if(o.d_sr, cfg.d_sr), set_if(o.d_rd, cfg.d_rd);
        set_if(o.p_s, cfg.p_s), set_if(o.p_r, cfg.p_r);
        set_if(o.sigma2_r, cfg.sigma2_r), set_if(o.sigma2_d, cfg.sigma2_d);
        set_if(o.sigma2_i1, cfg.sigma2_i1), set_if(o.sigma2_i2, cfg.sigma2_i2);
        set_if(o.r_b, cp.r_b), set_if(o.r_e, cp.r_e), set_if(o.beta_s, cp.beta_s), set_if(o.beta_r, cp.beta_r);
    }

    Metric parse_metric(const std::string &name)
    {
        if (name == "p_to")
            return Metric::p_to;
        if (name == "p_so")
            return Metric::p_so;
        if (name == "t_s")
            return Metric::t_s;
        if (name == "t_s_star")
            return Metric::t_s_star;
        if (name == "t_s_joint")
            return Metric::t_s_joint;
        throw Error(ErrorCode::violation, "metric", "VIOLATION(metric): unknown metric '" + name + "'");
    }

    ExperimentSpec build_spec(const Overrides &o, const std::string &scenario)
    {
        ExperimentSpec spec = scenario_defaults(scenario);
        apply(o, spec.cfg, spec.cp);
        set_if(o.seed, spec.mc_settings.seed);
        set_if(o.trials, spec.mc_settings.trials);
        set_if(o.r_sim, spec.mc_settings.r_sim);
        set_if(o.rel_tol, spec.solver.quad.rel_tol);
        set_if(o.phi, spec.phi);
        set_if(o.from, spec.from), set_if(o.to, spec.to), set_if(o.step, spec.step);
        set_if(o.series_var, spec.series_var);
        set_if(o.series, spec.series);
        set_if(o.gbar_db, spec.series);
        set_if(o.sweep, spec.sweep_var);
        set_if(o.mc, spec.mc);
        set_if(o.asymptotic, spec.asymptotic);
        set_if(o.joint_points, spec.joint_points);
        if (o.metric)
            spec.metric = parse_metric(*o.metric);
        spec.jobs = o.jobs;
        spec.mc_settings.jobs = o.jobs;
        return spec;
    }

    void emit(const std::string &text, const std::string &path, const std::string &meta)
    {
        if (path.empty())
        {
            std::cout << text;
            return;
        }
        std::ofstream(path, std::ios::binary) << text;
        if (!meta.empty())
            std::ofstream(path + ".meta", std::ios::binary) << meta;
    }

    int cmd_analytic(const ExperimentSpec &spec, const std::string &out)
    {
        validate(spec.cfg, spec.cp);
        const auto &q = spec.solver.quad;
        std::ostringstream csv;
        bool converged = true;
        csv << "quantity,value,err\n";
        auto line = [&](const char *name, double v, double e) { csv << name << ',' << format_double(v) << ',' << format_double(e) << '\n'; };
        const auto to = p_to(spec.cfg, spec.cp);
        line("p_to", to.value, to.err);
        line("p_to_asymptotic", p_to_asymptotic(spec.cfg, spec.cp).value, CsvRow::none);
        if (spec.cp.tau_e() > 0.0)
        {
            const auto so = p_so(spec.cfg, spec.cp, q);
            const auto soa = p_so_asymptotic(spec.cfg, spec.cp, q);
            const auto j = secrecy_integrals(spec.cfg, spec.cp, false, q);
            converged = so.converged && soa.converged;
            line("p_so", so.value, so.err);
            line("p_so_asymptotic", soa.value, soa.err);
            line("j1", j.j1, CsvRow::none);
            line("j2", j.j2, CsvRow::none);
            line("j3", j.j3, CsvRow::none);
        }
        else
            line("p_so", spec.cfg.lambda > 0.0 ? 1.0 : 0.0, 0.0);
        line("throughput", throughput(spec.cfg, spec.cp), CsvRow::none);
        emit(csv.str(), out, "");
        if (!converged)
        {
            std::cerr << "NONCONVERGED: quadrature budget exhausted\n";
            return 2;
        }
        return 0;
    }

    int cmd_montecarlo(const ExperimentSpec &spec, const std::string &out)
    {
        const auto [to, so] = mc::estimate_outage(spec.cfg, spec.cp, spec.mc_settings);
        std::ostringstream csv;
        csv << "quantity,value,halfwidth,trials,events\n";
        for (const auto &[name, e] : {std::pair{"p_to", to}, std::pair{"p_so", so}})
            csv << name << ',' << format_double(e.value) << ',' << format_double(e.err) << ',' << e.trials << ',' << e.events << '\n';
        emit(csv.str(), out, "");
        return 0;
    }

    int cmd_optimize(const ExperimentSpec &spec, const Overrides &o, const std::string &out)
    {
        // Fixed power splits when both are given, otherwise the joint grid search
        ThroughputSolution s;
        if (o.beta_s && o.beta_r)
        {
            const auto r = solve_rates(spec.cfg, *o.beta_s, *o.beta_r, spec.phi, spec.solver);
            s = {r.r_b, r.r_e, *o.beta_s, *o.beta_r, r.t_s, r.p_so, r.p_to, spec.phi, r.unimodal};
        }
        else
        {
            auto solver = spec.solver;
            solver.jobs = spec.jobs;
            s = solve_joint(spec.cfg, spec.phi, default_joint_grid(spec.cfg, spec.joint_points), solver);
        }
        std::ostringstream csv;
        csv << "r_b_star,r_e_star,beta_s_star,beta_r_star,t_s,p_so_at_opt,p_to_at_opt,phi,flag\n";
        csv << format_double(s.r_b_star) << ',' << format_double(s.r_e_star) << ',' << format_double(s.beta_s_star) << ','
            << format_double(s.beta_r_star) << ',' << format_double(s.t_s) << ',' << format_double(s.p_so_at_opt) << ','
            << format_double(s.p_to_at_opt) << ',' << format_double(s.phi) << ',' << (s.unimodal ? "" : "NONUNIMODAL") << '\n';
        emit(csv.str(), out, "");
        return 0;
    }

    int cmd_figure(const ExperimentSpec &spec, const std::string &out)
    {
        const auto result = run(spec);
        emit(format_csv(result.rows), out, format_meta(result.rows));
        if (result.nonconverged)
        {
            std::cerr << "NONCONVERGED: at least one sweep point is flagged\n";
            return 2;
        }
        return 0;
    }

    // Reduced oracle pairing suite
    int cmd_selftest(std::uint64_t seed)
    {
        int failures = 0;
        auto report = [&](const char *name, bool ok, const std::string &detail)
        {
            std::printf("%s %-34s %s\n", ok ? "PASS" : "FAIL", name, detail.c_str());
            failures += ok ? 0 : 1;
        };

        SystemConfig cfg;
        cfg.p_s = cfg.p_r = 1.0e5;
        CodePoint cp;

        double worst = 0.0;
        for (double te_db : {0.0, 10.0, 20.0})
        {
            cp.r_e = threshold_to_rate(db_to_linear(te_db));
            cp.r_b = cp.r_e + 1.0;
            const double c = j1_closed(cfg, cp);
            worst = std::max(worst, std::abs(integral_j1_oracle(cfg, cp).value - c) / c);
        }
        report("j1 closed form vs quadrature", worst <= 1e-6, "max rel diff " + format_double(worst));

        mc::Settings s;
        s.seed = seed;
        s.trials = 20000;
        s.z = mc::z99;
        std::vector<double> tb = {1.0, 4.0, 16.0, 64.0};
        const auto curve_to = mc::estimate_outage_curves(cfg, cp, tb, {}, s);
        bool ok = true;
        for (std::size_t i = 0; i < tb.size(); ++i)
        {
            CodePoint q = cp;
            q.r_b = threshold_to_rate(tb[i]);
            q.r_e = 0.0;
            const auto ci = mc::wilson_interval(curve_to.p_to[i].events, s.trials, mc::z99);
            const double a = p_to(cfg, q).value;
            ok = ok && a >= ci.lo && a <= ci.hi;
        }
        report("p_to analytic vs monte carlo", ok, std::to_string(s.trials) + " trials, 99% Wilson");

        s.trials = 2000;
        std::vector<double> te = {3.0, 30.0, 300.0};
        const auto curve_so = mc::estimate_outage_curves(cfg, cp, {}, te, s);
        ok = true;
        for (std::size_t i = 0; i < te.size(); ++i)
        {
            CodePoint q = cp;
            q.r_e = threshold_to_rate(te[i]);
            q.r_b = q.r_e;
            const auto ci = mc::wilson_interval(curve_so.p_so[i].events, s.trials, mc::z99);
            const double a = p_so(cfg, q).value;
            ok = ok && a >= ci.lo && a <= ci.hi;
        }
        report("p_so analytic vs ppp monte carlo", ok, std::to_string(s.trials) + " trials, 99% Wilson");

        const EavesGeometry geo{10.0, 10.0 * std::sqrt(2.0)};
        const auto [si, ri] = mc::sample_eaves_sinrs(cfg, cp, geo, 20000, seed);
        const double ks_si = mc::ks_distance(si, [&](double g) { return f_gamma_si(cfg, cp, geo, g); });
        const double ks_ri = mc::ks_distance(ri, [&](double g) { return f_gamma_ri(cfg, cp, geo, g); });
        report("eavesdropper sinr cdfs", std::max(ks_si, ks_ri) <= 0.02, "KS " + format_double(std::max(ks_si, ks_ri)));

        const auto dims = WishartDims::from_antennas(4, 2);
        const double ks_w = mc::ks_distance(mc::sample_largest_eigenvalues(dims, 100000, seed),
                                            [&](double x) { return largest_eig_cdf(dims, x); });
        report("wishart largest eigenvalue cdf", ks_w <= 0.01, "KS " + format_double(ks_w));
        return failures == 0 ? 0 : 1;
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"relaysec: secrecy outage analysis for multi-antenna relay wiretap channels"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Flat key=value file; every key mirrors a long flag, command line wins");
    app.allow_config_extras(CLI::config_extras_mode::error);

    Overrides o;
    app.add_option("--out", o.out, "Output file (CSV); metadata goes to <out>.meta");
    app.add_option("--seed", o.seed, "Master seed for Monte Carlo");
    app.add_option("--trials", o.trials, "Monte Carlo trials");
    app.add_option("--jobs", o.jobs, "Concurrent sweep points / trials, 0 = all cores");
    app.add_option("--rel-tol", o.rel_tol, "Quadrature relative tolerance");
    app.add_option("--phi", o.phi, "Secrecy outage constraint");
    app.add_option("--scenario", o.scenario, "Defaults for analytic / montecarlo / optimize")->check(CLI::IsMember(scenario_names()));

    app.add_option("--ns", o.n_s, "Source antennas");
    app.add_option("--nr", o.n_r, "Relay antennas");
    app.add_option("--nd", o.n_d, "Destination antennas");
    app.add_option("--ne", o.n_e, "Antennas per eavesdropper");
    app.add_option("--eta", o.eta, "Path-loss exponent");
    app.add_option("--lambda", o.lambda, "Eavesdropper density");
    app.add_option("--d-sr", o.d_sr, "Source-relay distance");
    app.add_option("--d-rd", o.d_rd, "Relay-destination distance");
    app.add_option("--p-s", o.p_s, "Source power (linear)");
    app.add_option("--p-r", o.p_r, "Relay power (linear)");
    app.add_option("--sigma2-r", o.sigma2_r, "Relay noise variance");
    app.add_option("--sigma2-d", o.sigma2_d, "Destination noise variance");
    app.add_option("--sigma2-i1", o.sigma2_i1, "Eavesdropper noise variance, first hop");
    app.add_option("--sigma2-i2", o.sigma2_i2, "Eavesdropper noise variance, second hop");
    app.add_option("--r-b", o.r_b, "Transmission rate");
    app.add_option("--r-e", o.r_e, "Redundancy rate");
    app.add_option("--beta-s", o.beta_s, "Source information power fraction");
    app.add_option("--beta-r", o.beta_r, "Relay information power fraction");

    app.add_option("--gbar-db", o.gbar_db, "Series of average SNRs in dB (fig2, fig3)")->delimiter(',');
    app.add_option("--series", o.series, "Series values")->delimiter(',');
    app.add_option("--series-var", o.series_var, "Parameter that differs between series");
    app.add_option("--sweep", o.sweep, "Swept parameter");
    app.add_option("--from", o.from, "Sweep start");
    app.add_option("--to", o.to, "Sweep end (inclusive)");
    app.add_option("--step", o.step, "Sweep step");
    app.add_option("--metric", o.metric, "p_to, p_so, t_s, t_s_star or t_s_joint");
    app.add_option("--mc", o.mc, "Add the Monte Carlo column (true/false)");
    app.add_option("--asymptotic", o.asymptotic, "Add the N_s -> infinity column (true/false)");
    app.add_option("--r-sim", o.r_sim, "Simulation disk radius, 0 = certified default");
    app.add_option("--joint-points", o.joint_points, "Power-split grid points per axis");

    auto *analytic = app.add_subcommand("analytic", "Outage probabilities at one operating point")->fallthrough();
    auto *montecarlo = app.add_subcommand("montecarlo", "Simulated outage probabilities at one operating point")->fallthrough();
    auto *optimize = app.add_subcommand("optimize", "Maximize secrecy throughput under P_so <= phi")->fallthrough();
    auto *figure = app.add_subcommand("figure", "CSV sweep for one scenario")->fallthrough();
    figure->add_option("name", o.figure, "Scenario name")->required()->check(CLI::IsMember(scenario_names()));
    auto *selftest = app.add_subcommand("selftest", "Reduced oracle pairing suite")->fallthrough();

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try
    {
        if (*selftest)
            return cmd_selftest(o.seed.value_or(1));
        const auto spec = build_spec(o, *figure ? o.figure : o.scenario);
        if (*analytic)
            return cmd_analytic(spec, o.out);
        if (*montecarlo)
            return cmd_montecarlo(spec, o.out);
        if (*optimize)
            return cmd_optimize(spec, o, o.out);
        return cmd_figure(spec, o.out);
    }
    catch (const Error &e)
    {
        std::cerr << e.what() << '\n';
        return e.code() == ErrorCode::nonconverged ? 2 : 1;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
