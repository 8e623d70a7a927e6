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

#ifndef RELAYSEC_QUADRATURE_HPP
#define RELAYSEC_QUADRATURE_HPP

#include "relaysec/model.hpp"

#include <vector>

namespace relaysec
{
    // Eavesdropper position in source-centred polar coordinates; the relay sits at theta = 0
    struct PolarPoint
    {
        double d_si;  // Radial distance from the source, >= 0
        double theta; // Angle in [0, pi]
    };

    struct QuadratureSettings
    {
        double rel_tol = 1e-7;        // Target relative error
        double abs_tol = 1e-12;       // Absolute error floor
        int max_refinements = 20;     // Maximum bisection depth of a radial panel
        double truncation_tol = 1e-10; // Discarded radial tail relative to the estimate

        bool operator==(const QuadratureSettings &) const = default;
    };

    struct IntegralResult
    {
        double value = 0.0;
        double err = 0.0;       // Radial + angular + truncation error estimate
        bool converged = true;  // False when the refinement budget ran out; value is the best estimate
        double r_max = 0.0;     // Radial truncation point
        int panels = 0;         // Radial panels used
    };

    // Which area integral of the secrecy exponent
    enum class SecrecyTerm
    {
        j1, // First-hop survival only
        j2, // Second-hop survival only
        j3  // Product of both survivals
    };

    // (tau_e sigma_i2^2 / (beta_r P_r)) d_ri^eta with d_ri from the cosine rule
    double psi(const SystemConfig &cfg, const CodePoint &cp, const PolarPoint &pt);

    // Shared per-configuration coefficients of the area integrands. Evaluation is cheap and
    // thread-safe after construction. With asymptotic = true the N_s -> infinity limits are used
    // (exponentials in place of the (1 + .)^-N factors, 1/l! in place of binomials).
    class IntegrandContext
    {
    public:
        IntegrandContext(const SystemConfig &cfg, const CodePoint &cp, bool asymptotic);

        double hop1(double d_si) const;                   // First-hop survival at tau_e
        double hop2(double d_si, double cos_theta) const; // Second-hop survival at tau_e
        double evaluate(SecrecyTerm term, const PolarPoint &pt) const;

        double hop1_rate() const { return a1_; } // tau_e sigma_i1^2 / (beta_s P_s)
        double hop2_rate() const { return a2_; } // tau_e sigma_i2^2 / (beta_r P_r)

    private:
        SystemConfig cfg_;
        bool asymptotic_;
        double half_eta_;
        double a1_, a2_;
        double hop1_prefactor_, hop2_prefactor_;
        double jam_scale_;                 // Multiplies psi / d_si^eta to give the jamming argument
        std::vector<double> hop1_coef_;    // Index p-1: sum over q of the AN terms
        std::vector<double> hop2_an_coef_; // Index n: relay AN terms
        std::vector<double> hop2_jam_coef_; // Index l: binomial(N_s, l) or 1/l!
        std::vector<double> inv_gamma_;    // Index p-1: 1 / Gamma(p)
    };

    // pi * integral_R^inf d Q(n_e, a max(d - shift, 0)^eta) dd, the analytic upper bound on the
    // discarded radial tail of any survival-function area integrand, valid for R >= shift.
    double envelope_tail(int n_e, double eta, double rate, double shift, double radius);

    // Area integral over d_si in [0, inf), theta in [0, pi] of d_si * integrand.
    // Radial: u = d_si^2 with adaptive Gauss-Kronrod panels on [0, R_max^2].
    // Angular: Gauss-Legendre, order 32 doubled until stable to rel_tol.
    IntegralResult integrate_secrecy_term(const SystemConfig &cfg, const CodePoint &cp, SecrecyTerm term,
                                          bool asymptotic, const QuadratureSettings &settings = {});

    IntegralResult integral_j1_oracle(const SystemConfig &cfg, const CodePoint &cp, const QuadratureSettings &settings = {});
    IntegralResult integral_j2(const SystemConfig &cfg, const CodePoint &cp, const QuadratureSettings &settings = {});
    IntegralResult integral_j3(const SystemConfig &cfg, const CodePoint &cp, const QuadratureSettings &settings = {});
    IntegralResult integral_j2_inf(const SystemConfig &cfg, const CodePoint &cp, const QuadratureSettings &settings = {});
    IntegralResult integral_j3_inf(const SystemConfig &cfg, const CodePoint &cp, const QuadratureSettings &settings = {});
}

#endif
