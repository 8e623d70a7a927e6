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

#ifndef RELAYSEC_EXPERIMENT_HPP
#define RELAYSEC_EXPERIMENT_HPP

#include "relaysec/model.hpp"
#include "relaysec/montecarlo.hpp"
#include "relaysec/throughput.hpp"

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace relaysec
{
    // What a sweep point reports in the analytic column
    enum class Metric
    {
        p_to,       // Transmission outage
        p_so,       // Secrecy outage
        t_s,        // Throughput at R_e*
        t_s_star,   // Best throughput over the rates
        t_s_joint   // Best throughput over the rates and both power splits
    };

    struct ExperimentSpec
    {
        std::string scenario = "custom"; // fig2 ... fig7 or custom
        SystemConfig cfg;
        CodePoint cp;
        std::string series_var;          // Parameter that differs between curves, empty for one curve
        std::vector<double> series;
        std::string sweep_var = "tau_e_db";
        double from = 0.0, to = 1.0, step = 0.1;
        Metric metric = Metric::p_so;
        bool analytic = true;
        bool asymptotic = false;
        bool mc = false;
        mc::Settings mc_settings;
        SolverSettings solver;
        double phi = 0.4;
        double fixed_beta = 0.5;         // Other split in one-axis sweeps
        int joint_points = 20;
        int jobs = 1;
    };

    struct CsvRow
    {
        static constexpr double none = std::numeric_limits<double>::quiet_NaN();

        std::string series;
        double x = none;
        double analytic = none;
        double analytic_err = none;
        double asymptotic = none;
        double mc = none;
        double mc_halfwidth = none;
        std::int64_t mc_trials = 0;
        std::string flag;
        double wall_seconds = 0.0; // Written to the metadata file only
    };

    struct ExperimentResult
    {
        std::vector<CsvRow> rows;
        bool nonconverged = false;
    };

    // Figure-caption defaults. Throws Error(violation) for an unknown name.
    ExperimentSpec scenario_defaults(const std::string &name);

    // Names accepted by scenario_defaults
    const std::vector<std::string> &scenario_names();

    // Inclusive arithmetic sweep; the last point snaps to `to` within half a step
    std::vector<double> sweep_values(double from, double to, double step);

    // Applies one series value to a copy of the spec's configuration
    void apply_parameter(const std::string &name, double value, SystemConfig &cfg, CodePoint &cp);

    void validate(const ExperimentSpec &spec);

    // Rows in series-major, sweep-minor order regardless of jobs
    ExperimentResult run(const ExperimentSpec &spec);

    // Shortest round-trip decimal; NaN becomes an empty field
    std::string format_double(double value);

    std::string csv_header();
    std::string format_csv(const std::vector<CsvRow> &rows);
    std::string format_meta(const std::vector<CsvRow> &rows);
}

#endif
