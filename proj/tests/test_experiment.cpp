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

#include <catch2/catch_amalgamated.hpp>

#include "relaysec/experiment.hpp"

#include <charconv>
#include <cmath>
#include <random>
#include <sstream>

using namespace relaysec;
using Catch::Approx;

namespace
{
    std::string field_of(auto &&fn)
    {
        try
        {
            fn();
        }
        catch (const Error &e)
        {
            return e.field();
        }
        return {};
    }

    std::vector<std::string> lines(const std::string &text)
    {
        std::vector<std::string> out;
        std::istringstream in(text);
        for (std::string l; std::getline(in, l);)
            out.push_back(l);
        return out;
    }
}

TEST_CASE("Experiment - sweep values")
{
    const auto v = sweep_values(0.0, 27.0, 3.0);
    REQUIRE(v.size() == 10);
    CHECK(v.front() == 0.0);
    CHECK(v.back() == 27.0);
    const auto w = sweep_values(0.05, 1.0, 0.05);
    REQUIRE(w.size() == 20);
    CHECK(w.back() == 1.0);
    CHECK(sweep_values(2.0, 2.0, 1.0) == std::vector<double>{2.0});
    CHECK(field_of([] { sweep_values(0.0, 1.0, 0.0); }) == "step");
    CHECK(field_of([] { sweep_values(1.0, 0.0, 0.1); }) == "to");
}

TEST_CASE("Experiment - number formatting round-trips")
{
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> e(-300.0, 300.0);
    for (int i = 0; i < 2000; ++i)
    {
        const double x = std::pow(10.0, e(rng) / 10.0) * (i % 2 ? -1.0 : 1.0);
        const std::string s = format_double(x);
        double y = 0.0;
        std::from_chars(s.data(), s.data() + s.size(), y);
        CHECK(y == x);
    }
    CHECK(format_double(CsvRow::none).empty());
    CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("Experiment - CSV layout")
{
    CHECK(csv_header() == "series,x,analytic,analytic_err,asymptotic,mc,mc_halfwidth,mc_trials,flag\n");
    CsvRow r;
    r.series = "n_s=4";
    r.x = 1.5;
    r.analytic = 0.25;
    r.flag = "NONCONVERGED";
    const auto out = lines(format_csv({r}));
    REQUIRE(out.size() == 2);
    CHECK(out[0] + "\n" == csv_header());
    CHECK(out[1] == "n_s=4,1.5,0.25,,,,,,NONCONVERGED"); // No MC column without trials
    CHECK(lines(format_meta({r}))[0] == "series,x,wall_seconds");
}

TEST_CASE("Experiment - scenario captions")
{
    for (const auto &name : scenario_names())
        CHECK_NOTHROW(validate(scenario_defaults(name)));
    CHECK(field_of([] { scenario_defaults("fig9"); }) == "figure");

    const auto f2 = scenario_defaults("fig2");
    CHECK(f2.metric == Metric::p_to);
    CHECK(f2.series == std::vector<double>{0.0, 5.0, 10.0});
    CHECK(f2.cfg.n_s == 4);
    CHECK(f2.cfg.n_r == 2);
    CHECK(f2.cfg.eta == 4.0);
    CHECK(f2.mc_settings.trials == 100000);

    const auto f3 = scenario_defaults("fig3");
    CHECK(f3.metric == Metric::p_so);
    CHECK(f3.cfg.lambda == 0.01);
    CHECK(f3.cp.beta_s == 0.5);

    for (const char *name : {"fig4", "fig5", "fig6"})
    {
        const auto s = scenario_defaults(name);
        CHECK(s.series == std::vector<double>{4.0, 8.0, 16.0});
        CHECK(s.phi == 0.4);
        // gbar_b / gbar_e = 20 at equal powers
        CHECK(s.cfg.sigma2_i1 / s.cfg.sigma2_r == Approx(20.0));
        CHECK(s.cfg.p_s * std::pow(s.cfg.d_sr, -s.cfg.eta) / s.cfg.sigma2_r == Approx(10.0));
    }
    CHECK(scenario_defaults("fig7").series == std::vector<double>{0.005, 0.01, 0.02});
}

TEST_CASE("Experiment - parameters")
{
    SystemConfig cfg;
    CodePoint cp;
    apply_parameter("gbar_b_db", 10.0, cfg, cp);
    CHECK(derive(cfg, cp).gbar_sr == Approx(10.0));
    CHECK(derive(cfg, cp).gbar_rd == Approx(10.0));
    apply_parameter("tau_e_db", 0.0, cfg, cp);
    CHECK(cp.tau_e() == Approx(1.0));
    CHECK(cp.r_b >= cp.r_e);
    apply_parameter("n_s", 8.0, cfg, cp);
    CHECK(cfg.n_s == 8);
    CHECK(field_of([&] { apply_parameter("n_s", 8.5, cfg, cp); }) == "n_s");
    CHECK(field_of([&] { apply_parameter("bogus", 1.0, cfg, cp); }) == "sweep");
}

TEST_CASE("Experiment - validation")
{
    auto s = scenario_defaults("custom");
    s.sweep_var = "nope";
    CHECK(field_of([&] { validate(s); }) == "sweep");

    s = scenario_defaults("fig3");
    s.sweep_var = "gbar_e_db";
    CHECK(field_of([&] { validate(s); }) == "sweep");

    s = scenario_defaults("custom");
    s.sweep_var = "n_s";
    s.from = 1.0;
    s.to = 4.0;
    s.step = 1.0;
    CHECK(field_of([&] { validate(s); }) == "n_s>n_e");

    s = scenario_defaults("custom");
    s.phi = 0.0;
    CHECK(field_of([&] { validate(s); }) == "phi");
}

TEST_CASE("Experiment - small run is ordered and independent of jobs")
{
    auto s = scenario_defaults("custom");
    s.series_var = "beta_s";
    s.series = {0.5, 0.9};
    s.from = 0.0;
    s.to = 6.0;
    s.step = 3.0;
    s.asymptotic = true;
    s.mc = true;
    s.mc_settings.trials = 300;
    const auto a = run(s);
    REQUIRE(a.rows.size() == 6);
    CHECK(a.rows[0].series == "beta_s=0.5");
    CHECK(a.rows[5].series == "beta_s=0.9");
    CHECK(a.rows[1].x == 3.0);
    for (const auto &r : a.rows)
    {
        CHECK(r.analytic > 0.0);
        CHECK(r.analytic < 1.0);
        CHECK(r.mc_trials == 300);
        CHECK(std::isfinite(r.asymptotic));
    }
    CHECK(a.rows[0].analytic > a.rows[2].analytic);
    CHECK_FALSE(a.nonconverged);

    s.jobs = 2;
    CHECK(format_csv(run(s).rows) == format_csv(a.rows));
}
