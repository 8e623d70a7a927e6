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
#include "relaysec/outage.hpp"
#include "relaysec/parallel.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <sstream>

namespace relaysec
{
    namespace
    {
        const std::vector<std::string> &parameter_names()
        {
            static const std::vector<std::string> names = {
                "gbar_b_db", "gbar_e_db", "tau_b_db", "tau_e_db", "r_b", "r_e", "beta_s", "beta_r",
                "lambda", "n_s", "n_r", "n_d", "n_e", "eta", "d_sr", "d_rd", "p_s", "p_r",
                "sigma2_r", "sigma2_d", "sigma2_i1", "sigma2_i2"};
            return names;
        }

        bool is_threshold(const std::string &name)
        {
            return name == "tau_b_db" || name == "tau_e_db" || name == "r_b" || name == "r_e";
        }

        int as_count(const std::string &name, double value)
        {
            if (value != std::round(value))
                throw Error(ErrorCode::violation, name, "VIOLATION(" + name + "): antenna count must be an integer");
            return int(value);
        }

        double seconds_since(std::chrono::steady_clock::time_point t0)
        {
            return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        }
    }

    const std::vector<std::string> &scenario_names()
    {
        static const std::vector<std::string> names = {"fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "custom"};
        return names;
    }

    ExperimentSpec scenario_defaults(const std::string &name)
    {
        ExperimentSpec s;
        s.scenario = name;
        // Common captions: eta = 4, N_r = N_d = N_e = 2, beta = 0.5, lambda = 0.01, d = 10
        s.cfg = SystemConfig{};
        s.cp.beta_s = s.cp.beta_r = 0.5;
        s.mc_settings.seed = 1;

        if (name == "fig2")
        {
            s.series_var = "gbar_b_db";
            s.series = {0.0, 5.0, 10.0};
            s.sweep_var = "tau_b_db";
            s.from = -8.0, s.to = 20.0, s.step = 2.0;
            s.metric = Metric::p_to;
            s.asymptotic = true;
            s.mc = true;
            s.mc_settings.trials = 100000;
        }
        else if (name == "fig3")
        {
            s.series_var = "gbar_e_db";
            s.series = {0.0, 5.0, 10.0};
            s.sweep_var = "tau_e_db";
            s.from = 0.0, s.to = 27.0, s.step = 3.0;
            s.metric = Metric::p_so;
            s.asymptotic = true;
            s.mc = true;
            s.mc_settings.trials = 10000;
        }
        else if (name == "fig4" || name == "fig5" || name == "fig6" || name == "fig7")
        {
            // gbar_b = 10 dB through P with unit destination-side noise; gbar_b / gbar_e = 20 through eavesdropper noise
            s.cfg.p_s = s.cfg.p_r = 1.0e5;
            s.cfg.sigma2_i1 = s.cfg.sigma2_i2 = 20.0;
            s.phi = 0.4;
            if (name == "fig7")
            {
                s.series_var = "lambda";
                s.series = {0.005, 0.01, 0.02};
                s.sweep_var = "n_s";
                s.from = 4.0, s.to = 16.0, s.step = 2.0;
                s.metric = Metric::t_s_joint;
                s.joint_points = 10;
            }
            else
            {
                s.series_var = "n_s";
                s.series = {4.0, 8.0, 16.0};
                if (name == "fig4")
                {
                    s.sweep_var = "r_b";
                    s.from = 0.0, s.to = 7.0, s.step = 0.1;
                    s.metric = Metric::t_s;
                }
                else
                {
                    s.sweep_var = name == "fig5" ? "beta_s" : "beta_r";
                    s.from = 0.05, s.to = 1.0, s.step = 0.05;
                    s.metric = Metric::t_s_star;
                }
            }
        }
        else if (name == "custom")
        {
            s.sweep_var = "tau_e_db";
            s.from = 0.0, s.to = 27.0, s.step = 3.0;
            s.metric = Metric::p_so;
        }
        else
            throw Error(ErrorCode::violation, "figure", "VIOLATION(figure): unknown scenario '" + name + "'");
        return s;
    }

    std::vector<double> sweep_values(double from, double to, double step)
    {
        if (!(step > 0.0))
            throw Error(ErrorCode::violation, "step", "VIOLATION(step): sweep step must be > 0");
        if (!(to >= from))
            throw Error(ErrorCode::violation, "to", "VIOLATION(to): sweep range is empty");
        std::vector<double> out;
        const auto n = std::int64_t(std::floor((to - from) / step + 0.5));
        if (n > 1000000)
            throw Error(ErrorCode::violation, "step", "VIOLATION(step): sweep has too many points");
        for (std::int64_t i = 0; i <= n; ++i)
            out.push_back(i == n && std::abs(from + double(n) * step - to) < 0.5 * step ? to : from + double(i) * step);
        return out;
    }

    void apply_parameter(const std::string &name, double value, SystemConfig &cfg, CodePoint &cp)
    {
        if (name == "gbar_b_db")
        {
            const double g = db_to_linear(value);
            cfg.p_s = g * std::pow(cfg.d_sr, cfg.eta) * cfg.sigma2_r;
            cfg.p_r = g * std::pow(cfg.d_rd, cfg.eta) * cfg.sigma2_d;
        }
        else if (name == "gbar_e_db")
        {
            const double g = db_to_linear(value);
            cfg.p_s = g * std::pow(cfg.d_sr, cfg.eta) * cfg.sigma2_i1;
            cfg.p_r = g * std::pow(cfg.d_rd, cfg.eta) * cfg.sigma2_i2;
        }
        else if (name == "tau_b_db" || name == "r_b")
        {
            cp.r_b = name == "r_b" ? value : threshold_to_rate(db_to_linear(value));
            cp.r_e = std::min(cp.r_e, cp.r_b);
        }
        else if (name == "tau_e_db" || name == "r_e")
        {
            cp.r_e = name == "r_e" ? value : threshold_to_rate(db_to_linear(value));
            cp.r_b = std::max(cp.r_b, cp.r_e);
        }
        else if (name == "beta_s")
            cp.beta_s = value;
        else if (name == "beta_r")
            cp.beta_r = value;
        else if (name == "lambda")
            cfg.lambda = value;
        else if (name == "n_s")
            cfg.n_s = as_count(name, value);
        else if (name == "n_r")
            cfg.n_r = as_count(name, value);
        else if (name == "n_d")
            cfg.n_d = as_count(name, value);
        else if (name == "n_e")
            cfg.n_e = as_count(name, value);
        else if (name == "eta")
            cfg.eta = value;
        else if (name == "d_sr")
            cfg.d_sr = value;
        else if (name == "d_rd")
            cfg.d_rd = value;
        else if (name == "p_s")
            cfg.p_s = value;
        else if (name == "p_r")
            cfg.p_r = value;
        else if (name == "sigma2_r")
            cfg.sigma2_r = value;
        else if (name == "sigma2_d")
            cfg.sigma2_d = value;
        else if (name == "sigma2_i1")
            cfg.sigma2_i1 = value;
        else if (name == "sigma2_i2")
            cfg.sigma2_i2 = value;
        else
            throw Error(ErrorCode::violation, "sweep", "VIOLATION(sweep): unknown parameter '" + name + "'");
    }

    namespace
    {
        struct Point
        {
            std::size_t series_index;
            double x;
            SystemConfig cfg;
            CodePoint cp;
        };

        std::string series_label(const ExperimentSpec &spec, std::size_t i)
        {
            return spec.series.empty() ? std::string("default") : spec.series_var + "=" + format_double(spec.series[i]);
        }

        std::vector<Point> expand(const ExperimentSpec &spec)
        {
            std::vector<Point> points;
            const std::size_t n_series = std::max<std::size_t>(spec.series.size(), 1);
            for (std::size_t s = 0; s < n_series; ++s)
                for (double x : sweep_values(spec.from, spec.to, spec.step))
                {
                    Point p{s, x, spec.cfg, spec.cp};
                    if (!spec.series.empty())
                        apply_parameter(spec.series_var, spec.series[s], p.cfg, p.cp);
                    apply_parameter(spec.sweep_var, x, p.cfg, p.cp);
                    points.push_back(p);
                }
            return points;
        }

        bool uses_tau_e(Metric m)
        {
            return m == Metric::p_so;
        }
    }

    void validate(const ExperimentSpec &spec)
    {
        if (spec.series.empty() != spec.series_var.empty())
            throw Error(ErrorCode::violation, "series", "VIOLATION(series): series values and series parameter go together");
        const auto &names = parameter_names();
        if (std::find(names.begin(), names.end(), spec.sweep_var) == names.end())
            throw Error(ErrorCode::violation, "sweep", "VIOLATION(sweep): unknown sweep parameter '" + spec.sweep_var + "'");
        if (!spec.series_var.empty() && std::find(names.begin(), names.end(), spec.series_var) == names.end())
            throw Error(ErrorCode::violation, "series", "VIOLATION(series): unknown series parameter '" + spec.series_var + "'");
        if (spec.series_var == spec.sweep_var)
            throw Error(ErrorCode::violation, "sweep", "VIOLATION(sweep): exactly one sweep variable; series must differ");
        if (spec.mc && spec.mc_settings.trials < 1)
            throw Error(ErrorCode::violation, "trials", "VIOLATION(trials): trials must be >= 1");
        if (!(spec.phi > 0.0 && spec.phi <= 1.0))
            throw Error(ErrorCode::violation, "phi", "VIOLATION(phi): phi must lie in (0, 1]");
        if (spec.joint_points < 2)
            throw Error(ErrorCode::violation, "joint_points", "VIOLATION(joint_points): need at least 2");
        for (const auto &p : expand(spec))
        {
            validate(p.cfg, p.cp);
            if (uses_tau_e(spec.metric) && p.cfg.lambda > 0.0 && !(p.cp.tau_e() > 0.0))
                throw Error(ErrorCode::violation, "tau_e", "VIOLATION(tau_e): secrecy outage sweeps need tau_e > 0");
        }
    }

    ExperimentResult run(const ExperimentSpec &spec)
    {
        validate(spec);
        const auto points = expand(spec);
        ExperimentResult result;
        result.rows.resize(points.size());

        SolverSettings solver = spec.solver;
        solver.jobs = 1; // Points already run concurrently
        const QuadratureSettings &quad = solver.quad;

        // Analytic and asymptotic columns
        std::vector<char> nonconv(points.size(), 0);
        parallel_for(std::int64_t(points.size()), spec.jobs, [&](std::int64_t begin, std::int64_t end)
                     {
            for (std::int64_t i = begin; i < end; ++i)
            {
                const auto t0 = std::chrono::steady_clock::now();
                const Point &p = points[i];
                CsvRow &row = result.rows[i];
                row.series = series_label(spec, p.series_index);
                row.x = p.x;
                try
                {
                    switch (spec.metric)
                    {
                    case Metric::p_to:
                    {
                        const auto a = p_to(p.cfg, p.cp);
                        row.analytic = a.value, row.analytic_err = a.err;
                        if (spec.asymptotic)
                            row.asymptotic = p_to_asymptotic(p.cfg, p.cp).value;
                        break;
                    }
                    case Metric::p_so:
                    {
                        const auto a = p_so(p.cfg, p.cp, quad);
                        row.analytic = a.value, row.analytic_err = a.err;
                        bool ok = a.converged;
                        if (spec.asymptotic)
                        {
                            const auto b = p_so_asymptotic(p.cfg, p.cp, quad);
                            row.asymptotic = b.value;
                            ok = ok && b.converged;
                        }
                        if (!ok)
                            row.flag = "NONCONVERGED";
                        break;
                    }
                    case Metric::t_s:
                    {
                        const double r_e = solve_re_star(p.cfg, p.cp.beta_s, p.cp.beta_r, spec.phi, solver);
                        if (p.cp.r_b < r_e)
                            row.flag = "BELOW_RE";
                        else
                        {
                            CodePoint cp = p.cp;
                            cp.r_e = r_e;
                            row.analytic = throughput(p.cfg, cp);
                        }
                        break;
                    }
                    case Metric::t_s_star:
                    {
                        const auto r = solve_rates(p.cfg, p.cp.beta_s, p.cp.beta_r, spec.phi, solver);
                        row.analytic = r.t_s;
                        if (!r.unimodal)
                            row.flag = "NONUNIMODAL";
                        break;
                    }
                    case Metric::t_s_joint:
                    {
                        const auto r = solve_joint(p.cfg, spec.phi, default_joint_grid(p.cfg, spec.joint_points), solver);
                        row.analytic = r.t_s;
                        if (!r.unimodal)
                            row.flag = "NONUNIMODAL";
                        break;
                    }
                    }
                }
                catch (const Error &e)
                {
                    if (e.code() != ErrorCode::nonconverged)
                        throw;
                    row.flag = "NONCONVERGED";
                }
                if (row.flag == "NONCONVERGED")
                    nonconv[i] = 1;
                row.wall_seconds = seconds_since(t0);
            } });
        result.nonconverged = std::any_of(nonconv.begin(), nonconv.end(), [](char c) { return c != 0; });

        // Monte Carlo column
        const bool mc_metric = spec.metric == Metric::p_to || spec.metric == Metric::p_so;
        if (!spec.mc || !mc_metric)
            return result;
        mc::Settings mcs = spec.mc_settings;
        mcs.jobs = spec.jobs;
        std::vector<std::size_t> idx;
        for (std::size_t s = 0, first = 0; first < points.size(); ++s)
        {
            idx.clear();
            for (std::size_t i = first; i < points.size() && points[i].series_index == s; ++i)
                idx.push_back(i);
            first += idx.size();
            const auto t0 = std::chrono::steady_clock::now();

            if (is_threshold(spec.sweep_var))
            {
                // Common random numbers across the thresholds of one curve
                std::vector<double> taus;
                for (auto i : idx)
                    taus.push_back(spec.metric == Metric::p_to ? points[i].cp.tau_b() : points[i].cp.tau_e());
                const Point &p0 = points[idx.front()];
                const auto c = spec.metric == Metric::p_to ? mc::estimate_outage_curves(p0.cfg, p0.cp, taus, {}, mcs)
                                                           : mc::estimate_outage_curves(p0.cfg, p0.cp, {}, taus, mcs);
                const auto &est = spec.metric == Metric::p_to ? c.p_to : c.p_so;
                for (std::size_t k = 0; k < idx.size(); ++k)
                {
                    CsvRow &row = result.rows[idx[k]];
                    row.mc = est[k].value, row.mc_halfwidth = est[k].err, row.mc_trials = est[k].trials;
                }
            }
            else
            {
                for (auto i : idx)
                {
                    const auto [to, so] = mc::estimate_outage(points[i].cfg, points[i].cp, mcs);
                    const auto &e = spec.metric == Metric::p_to ? to : so;
                    CsvRow &row = result.rows[i];
                    row.mc = e.value, row.mc_halfwidth = e.err, row.mc_trials = e.trials;
                }
            }
            const double share = seconds_since(t0) / double(idx.size());
            for (auto i : idx)
                result.rows[i].wall_seconds += share;
        }
        return result;
    }

    std::string format_double(double value)
    {
        if (std::isnan(value))
            return {};
        char buf[64];
        const auto r = std::to_chars(buf, buf + sizeof(buf), value);
        return std::string(buf, r.ptr);
    }

    std::string csv_header()
    {
        return "series,x,analytic,analytic_err,asymptotic,mc,mc_halfwidth,mc_trials,flag\n";
    }

    std::string format_csv(const std::vector<CsvRow> &rows)
    {
        std::ostringstream out;
        out << csv_header();
        for (const auto &r : rows)
            out << r.series << ',' << format_double(r.x) << ',' << format_double(r.analytic) << ','
                << format_double(r.analytic_err) << ',' << format_double(r.asymptotic) << ',' << format_double(r.mc) << ','
                << format_double(r.mc_halfwidth) << ',' << (r.mc_trials > 0 ? std::to_string(r.mc_trials) : std::string())
                << ',' << r.flag << '\n';
        return out.str();
    }

    std::string format_meta(const std::vector<CsvRow> &rows)
    {
        std::ostringstream out;
        out << "series,x,wall_seconds\n";
        for (const auto &r : rows)
            out << r.series << ',' << format_double(r.x) << ',' << format_double(r.wall_seconds) << '\n';
        return out.str();
    }
}
