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

#include "relaysec/outage.hpp"
#include "relaysec/special_functions.hpp"
#include "relaysec/wishart.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>

namespace relaysec
{
    const char *to_string(EstimateKind kind)
    {
        switch (kind)
        {
        case EstimateKind::analytic:
            return "analytic";
        case EstimateKind::asymptotic:
            return "asymptotic";
        case EstimateKind::monte_carlo:
            return "monte-carlo";
        }
        return "unknown";
    }

    OutageEstimate p_to(const SystemConfig &cfg, const CodePoint &cp)
    {
        validate(cfg, cp);
        const double tau = cp.tau_b();
        const double f_sr = f_gamma_sr(cfg, cp, tau);
        const double f_rd = f_gamma_rd(cfg, cp, tau);
        OutageEstimate out;
        out.value = std::clamp(f_sr + f_rd - f_sr * f_rd, 0.0, 1.0);
        out.err = 64.0 * std::numeric_limits<double>::epsilon() * (f_sr + f_rd);
        return out;
    }

    OutageEstimate p_to_asymptotic(const SystemConfig &cfg, const CodePoint &cp)
    {
        validate(cfg, cp);
        OutageEstimate out;
        out.kind = EstimateKind::asymptotic;
        out.value = f_gamma_rd(cfg, cp, cp.tau_b());
        out.err = 64.0 * std::numeric_limits<double>::epsilon() * out.value;
        return out;
    }

    namespace
    {
        // (pi / eta) a^(-2/eta) sum_p Gamma(2/eta + p - 1) / Gamma(p) c_p
        template <typename Coef>
        double j1_from_coefficients(const SystemConfig &cfg, const CodePoint &cp, Coef coef)
        {
            validate(cfg, cp);
            const double tau = cp.tau_e();
            if (!(tau > 0.0))
                throw Error(ErrorCode::domain, "tau_e", "j1_closed: tau_e must be > 0");
            const double a = cp.beta_s * cfg.p_s / (tau * cfg.sigma2_i1);
            const double s = 2.0 / cfg.eta;
            special::CompensatedSum sum;
            for (int p = 1; p <= cfg.n_e; ++p)
                sum.add(std::exp(std::lgamma(s + p - 1.0) - std::lgamma(double(p))) * coef(p));
            return std::numbers::pi / cfg.eta * std::pow(a, s) * sum.value();
        }
    }

    double j1_closed(const SystemConfig &cfg, const CodePoint &cp)
    {
        const double y = derive(cfg, cp).kappa_1 * cp.tau_e();
        return j1_from_coefficients(cfg, cp, [&](int p)
                                    {
                                        double c = 0.0;
                                        for (int q = 0; q <= cfg.n_e - p; ++q)
                                            c += special::binomial(cfg.n_s - 1, q) * special::power_ratio(y, q, cfg.n_s - 1);
                                        return c; });
    }

    double j1_closed_asymptotic(const SystemConfig &cfg, const CodePoint &cp)
    {
        const double w = (1.0 - cp.beta_s) / cp.beta_s * cp.tau_e();
        return j1_from_coefficients(cfg, cp, [&](int p)
                                    {
                                        double c = 0.0;
                                        for (int q = 0; q <= cfg.n_e - p; ++q)
                                            c += w == 0.0 ? (q == 0 ? 1.0 : 0.0) : std::exp(q * std::log(w) - w - std::lgamma(q + 1.0));
                                        return c; });
    }

    // ---------------------------------------------------------------------------------------------
    // J cache
    // ---------------------------------------------------------------------------------------------

    namespace
    {
        using CacheKey = std::array<double, 18>;

        CacheKey make_key(const SystemConfig &cfg, const CodePoint &cp, bool asymptotic, const QuadratureSettings &s)
        {
            // Only the fields the integrands depend on
            return {double(cfg.n_s), double(cfg.n_r), double(cfg.n_e), cfg.eta, cfg.d_sr, cfg.p_s, cfg.p_r,
                    cfg.sigma2_i1, cfg.sigma2_i2, cp.beta_s, cp.beta_r, cp.tau_e(), asymptotic ? 1.0 : 0.0,
                    s.rel_tol, s.abs_tol, double(s.max_refinements), s.truncation_tol, 0.0};
        }

        struct SecrecyCache
        {
            std::mutex mutex;
            std::map<CacheKey, SecrecyIntegrals> map;
        };

        SecrecyCache &cache()
        {
            static SecrecyCache c;
            return c;
        }
    }

    SecrecyIntegrals secrecy_integrals(const SystemConfig &cfg, const CodePoint &cp, bool asymptotic,
                                       const QuadratureSettings &settings)
    {
        validate(cfg, cp);
        const auto key = make_key(cfg, cp, asymptotic, settings);
        auto &c = cache();
        {
            std::lock_guard lock(c.mutex);
            if (auto it = c.map.find(key); it != c.map.end())
                return it->second;
        }

        // Computed outside the lock; a concurrent duplicate computes the same value
        SecrecyIntegrals out;
        out.j1 = asymptotic ? j1_closed_asymptotic(cfg, cp) : j1_closed(cfg, cp);
        const auto j2 = integrate_secrecy_term(cfg, cp, SecrecyTerm::j2, asymptotic, settings);
        const auto j3 = integrate_secrecy_term(cfg, cp, SecrecyTerm::j3, asymptotic, settings);
        out.j2 = j2.value;
        out.j3 = j3.value;
        out.err = j2.err + j3.err;
        out.converged = j2.converged && j3.converged;

        std::lock_guard lock(c.mutex);
        return c.map.try_emplace(key, out).first->second;
    }

    void clear_secrecy_cache()
    {
        std::lock_guard lock(cache().mutex);
        cache().map.clear();
    }

    std::size_t secrecy_cache_size()
    {
        std::lock_guard lock(cache().mutex);
        return cache().map.size();
    }

    // ---------------------------------------------------------------------------------------------
    // Secrecy outage
    // ---------------------------------------------------------------------------------------------

    namespace
    {
        OutageEstimate assemble_p_so(const SystemConfig &cfg, const CodePoint &cp, bool asymptotic,
                                     const QuadratureSettings &settings)
        {
            validate(cfg, cp);
            OutageEstimate out;
            out.kind = asymptotic ? EstimateKind::asymptotic : EstimateKind::analytic;
            if (cfg.lambda == 0.0)
                return out;
            if (cp.tau_e() == 0.0)
            {
                out.value = 1.0;
                return out;
            }

            const auto j = secrecy_integrals(cfg, cp, asymptotic, settings);
            double exponent = j.j1 + j.j2 - j.j3;
            if (exponent < -j.err)
                throw Error(ErrorCode::numerical_inconsistency, "p_so",
                            "p_so: J1 + J2 - J3 = " + std::to_string(exponent) + " is negative beyond the error bound");
            exponent = std::max(exponent, 0.0);
            const double survive = std::exp(-2.0 * cfg.lambda * exponent);
            out.value = std::clamp(-std::expm1(-2.0 * cfg.lambda * exponent), 0.0, 1.0);
            out.err = 2.0 * cfg.lambda * j.err * survive;
            out.converged = j.converged;
            return out;
        }
    }

    OutageEstimate p_so(const SystemConfig &cfg, const CodePoint &cp, const QuadratureSettings &settings)
    {
        return assemble_p_so(cfg, cp, false, settings);
    }

    OutageEstimate p_so_asymptotic(const SystemConfig &cfg, const CodePoint &cp, const QuadratureSettings &settings)
    {
        return assemble_p_so(cfg, cp, true, settings);
    }
}
