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

#include "relaysec/quadrature.hpp"
#include "relaysec/special_functions.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace relaysec
{
    using special::binomial;
    using special::power_ratio;

    double psi(const SystemConfig &cfg, const CodePoint &cp, const PolarPoint &pt)
    {
        const double base = cfg.d_sr * cfg.d_sr + pt.d_si * pt.d_si - 2.0 * cfg.d_sr * pt.d_si * std::cos(pt.theta);
        return cp.tau_e() * cfg.sigma2_i2 / (cp.beta_r * cfg.p_r) * std::pow(std::max(base, 0.0), cfg.eta / 2.0);
    }

    // ---------------------------------------------------------------------------------------------
    // Integrand context
    // ---------------------------------------------------------------------------------------------

    IntegrandContext::IntegrandContext(const SystemConfig &cfg, const CodePoint &cp, bool asymptotic)
        : cfg_(cfg), asymptotic_(asymptotic), half_eta_(cfg.eta / 2.0)
    {
        const double tau = cp.tau_e();
        const auto ds = derive(cfg, cp);
        const int ne = cfg.n_e;

        a1_ = tau * cfg.sigma2_i1 / (cp.beta_s * cfg.p_s);
        a2_ = tau * cfg.sigma2_i2 / (cp.beta_r * cfg.p_r);

        inv_gamma_.resize(ne);
        for (int p = 1; p <= ne; ++p)
            inv_gamma_[p - 1] = std::exp(-std::lgamma(double(p)));

        // First hop: AN prefactor folded into each q-term
        hop1_coef_.assign(ne, 0.0);
        const double w1 = asymptotic ? (1.0 - cp.beta_s) / cp.beta_s * tau : ds.kappa_1 * tau;
        for (int p = 1; p <= ne; ++p)
        {
            double sum = 0.0;
            for (int q = 0; q <= ne - p; ++q)
            {
                if (asymptotic)
                    sum += w1 == 0.0 ? (q == 0 ? 1.0 : 0.0) : std::exp(q * std::log(w1) - w1 - std::lgamma(q + 1.0));
                else
                    sum += binomial(cfg.n_s - 1, q) * power_ratio(w1, q, cfg.n_s - 1);
            }
            hop1_coef_[p - 1] = sum;
        }
        hop1_prefactor_ = 1.0;

        // Second hop: relay AN terms, independent of location
        const double w2 = ds.kappa_2 * tau;
        hop2_an_coef_.resize(ne);
        for (int n = 0; n < ne; ++n)
            hop2_an_coef_[n] = binomial(cfg.n_r - 1, n) * power_ratio(w2, n, cfg.n_r - 1);
        hop2_prefactor_ = 1.0;

        hop2_jam_coef_.resize(ne);
        for (int l = 0; l < ne; ++l)
            hop2_jam_coef_[l] = asymptotic ? std::exp(-std::lgamma(l + 1.0)) : binomial(cfg.n_s, l);

        jam_scale_ = asymptotic ? cfg.p_s / cfg.sigma2_i2 : cfg.p_s / (cfg.n_s * cfg.sigma2_i2);
    }

    double IntegrandContext::hop1(double d_si) const
    {
        const double z = a1_ * std::pow(d_si, cfg_.eta);
        double sum = 0.0, zp = 1.0;
        for (int p = 1; p <= cfg_.n_e; ++p)
        {
            sum += zp * inv_gamma_[p - 1] * hop1_coef_[p - 1];
            zp *= z;
        }
        return hop1_prefactor_ * std::exp(-z) * sum;
    }

    double IntegrandContext::hop2(double d_si, double cos_theta) const
    {
        const int ne = cfg_.n_e;
        const double base = std::max(cfg_.d_sr * cfg_.d_sr + d_si * d_si - 2.0 * cfg_.d_sr * d_si * cos_theta, 0.0);
        const double psi = a2_ * (half_eta_ == 2.0 ? base * base : std::pow(base, half_eta_));
        const double d_eta = std::pow(d_si, cfg_.eta);
        if (d_eta == 0.0)
            return 0.0; // Jamming from the co-located source dominates
        const double y = jam_scale_ * psi / d_eta;

        // Cumulative jamming sums: jam[k] = sum_{l <= k} coef_l * y^l * decay(y)
        std::array<double, 64> jam{};
        const double log_y = y > 0.0 ? std::log(y) : -std::numeric_limits<double>::infinity();
        const double log_decay = asymptotic_ ? -y : -cfg_.n_s * std::log1p(y);
        double running = 0.0;
        for (int l = 0; l < ne; ++l)
        {
            const double r = l == 0 ? std::exp(log_decay) : (y > 0.0 ? std::exp(l * log_y + log_decay) : 0.0);
            running += hop2_jam_coef_[l] * r;
            jam[l] = running;
        }

        double sum = 0.0, psi_m = 1.0;
        for (int m = 1; m <= ne; ++m)
        {
            double mid = 0.0;
            for (int n = 0; n <= ne - m; ++n)
                mid += hop2_an_coef_[n] * jam[ne - m - n];
            sum += psi_m * inv_gamma_[m - 1] * mid;
            psi_m *= psi;
        }
        return hop2_prefactor_ * std::exp(-psi) * sum;
    }

    double IntegrandContext::evaluate(SecrecyTerm term, const PolarPoint &pt) const
    {
        switch (term)
        {
        case SecrecyTerm::j1:
            return hop1(pt.d_si);
        case SecrecyTerm::j2:
            return hop2(pt.d_si, std::cos(pt.theta));
        case SecrecyTerm::j3:
            return hop1(pt.d_si) * hop2(pt.d_si, std::cos(pt.theta));
        }
        return 0.0;
    }

    // ---------------------------------------------------------------------------------------------
    // Envelope
    // ---------------------------------------------------------------------------------------------

    double envelope_tail(int n_e, double eta, double rate, double shift, double radius)
    {
        if (!(radius >= shift))
            throw Error(ErrorCode::domain, "envelope_tail", "envelope_tail: radius must be >= shift");
        if (rate <= 0.0)
            return std::numeric_limits<double>::infinity();
        const double t0 = rate * std::pow(radius - shift, eta);
        double second = 0.0, first = 0.0;
        for (int k = 0; k < n_e; ++k)
        {
            const double inv_fact = std::exp(-std::lgamma(k + 1.0));
            second += boost::math::tgamma(2.0 / eta + k, t0) * inv_fact;
            if (shift > 0.0)
                first += boost::math::tgamma(1.0 / eta + k, t0) * inv_fact;
        }
        return std::numbers::pi / eta * (std::pow(rate, -2.0 / eta) * second + shift * std::pow(rate, -1.0 / eta) * first);
    }

    // ---------------------------------------------------------------------------------------------
    // Integration rules
    // ---------------------------------------------------------------------------------------------

    namespace
    {
        // Gauss-Legendre rule mapped to [0, pi], stored as cos(theta) and weights
        struct AngularRule
        {
            std::vector<double> cos_theta;
            std::vector<double> weight;
        };

        template <unsigned N>
        AngularRule make_rule()
        {
            AngularRule rule;
            const auto &x = boost::math::quadrature::gauss<double, N>::abscissa();
            const auto &w = boost::math::quadrature::gauss<double, N>::weights();
            const double half = std::numbers::pi / 2.0;
            for (std::size_t i = 0; i < x.size(); ++i)
            {
                const bool centre = (N % 2 == 1) && i == 0;
                for (double s : {1.0, -1.0})
                {
                    rule.cos_theta.push_back(std::cos(half * (1.0 + s * x[i])));
                    rule.weight.push_back(half * w[i]);
                    if (centre)
                        break;
                }
            }
            return rule;
        }

        const std::array<AngularRule, 6> &angular_rules()
        {
            static const std::array<AngularRule, 6> rules = {make_rule<32>(), make_rule<64>(), make_rule<128>(),
                                                             make_rule<256>(), make_rule<512>(), make_rule<1024>()};
            return rules;
        }

        struct KronrodTable
        {
            std::array<double, 8> x{};  // Non-negative nodes, x[0] = 0
            std::array<double, 8> wk{}; // Kronrod weights
            std::array<double, 8> wg{}; // Gauss weights at even indices, 0 elsewhere
        };

        const KronrodTable &kronrod15()
        {
            static const KronrodTable table = []
            {
                KronrodTable t;
                const auto &x = boost::math::quadrature::gauss_kronrod<double, 15>::abscissa();
                const auto &wk = boost::math::quadrature::gauss_kronrod<double, 15>::weights();
                const auto &wg = boost::math::quadrature::gauss<double, 7>::weights();
                for (std::size_t i = 0; i < 8; ++i)
                {
                    t.x[i] = x[i];
                    t.wk[i] = wk[i];
                    t.wg[i] = (i % 2 == 0) ? wg[i / 2] : 0.0;
                }
                return t;
            }();
            return table;
        }

        struct AngularValue
        {
            double value;
            double err;
            bool converged;
        };

        struct Panel
        {
            double a, b;
            double value, err, ang_err;
            bool ang_ok;
            int depth;
        };

        class SecrecyIntegrator
        {
        public:
            SecrecyIntegrator(const IntegrandContext &ctx, SecrecyTerm term, const QuadratureSettings &s)
                : ctx_(ctx), term_(term), settings_(s) {}

            // Integral over theta in [0, pi] at fixed radius
            AngularValue angular(double d) const
            {
                if (term_ == SecrecyTerm::j1)
                    return {std::numbers::pi * ctx_.hop1(d), 0.0, true};
                const double h1 = term_ == SecrecyTerm::j3 ? ctx_.hop1(d) : 1.0;
                if (h1 == 0.0)
                    return {0.0, 0.0, true};

                const auto &rules = angular_rules();
                const double inner_tol = 0.1 * settings_.rel_tol;
                const double floor = 1e-3 * settings_.abs_tol;
                double prev = apply(rules[0], d);
                for (std::size_t k = 1; k < rules.size(); ++k)
                {
                    const double cur = apply(rules[k], d);
                    const double diff = std::abs(cur - prev);
                    if (diff <= std::max(inner_tol * std::abs(cur), floor))
                        return {h1 * cur, h1 * diff, true};
                    prev = cur;
                }
                return {h1 * prev, h1 * std::abs(prev) * settings_.rel_tol, false};
            }

            // One GK15 panel over u in [a, b]; integrand 0.5 * angular(sqrt(u))
            Panel panel(double a, double b, int depth) const
            {
                const auto &k = kronrod15();
                const double centre = 0.5 * (a + b), half = 0.5 * (b - a);
                std::array<double, 15> fv{};
                double resk = 0.0, resg = 0.0, ang = 0.0;
                bool ang_ok = true;
                auto eval = [&](double u)
                {
                    const auto r = angular(std::sqrt(std::max(u, 0.0)));
                    ang_ok = ang_ok && r.converged;
                    return std::pair{0.5 * r.value, 0.5 * r.err};
                };
                auto [f0, e0] = eval(centre);
                fv[0] = f0;
                resk = k.wk[0] * f0;
                resg = k.wg[0] * f0;
                ang = k.wk[0] * e0;
                for (std::size_t i = 1; i < 8; ++i)
                {
                    auto [fp, ep] = eval(centre + half * k.x[i]);
                    auto [fm, em] = eval(centre - half * k.x[i]);
                    fv[2 * i - 1] = fp;
                    fv[2 * i] = fm;
                    resk += k.wk[i] * (fp + fm);
                    resg += k.wg[i] * (fp + fm);
                    ang += k.wk[i] * (ep + em);
                }
                // QUADPACK-style error scaling
                const double mean = 0.5 * resk;
                double resasc = k.wk[0] * std::abs(fv[0] - mean);
                double resabs = k.wk[0] * std::abs(fv[0]);
                for (std::size_t i = 1; i < 8; ++i)
                {
                    resasc += k.wk[i] * (std::abs(fv[2 * i - 1] - mean) + std::abs(fv[2 * i] - mean));
                    resabs += k.wk[i] * (std::abs(fv[2 * i - 1]) + std::abs(fv[2 * i]));
                }
                resasc *= half;
                resabs *= half;
                double err = std::abs((resk - resg) * half);
                if (resasc != 0.0 && err != 0.0)
                    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
                const double eps = std::numeric_limits<double>::epsilon();
                if (resabs > std::numeric_limits<double>::min() / (50.0 * eps))
                    err = std::max(50.0 * eps * resabs, err);
                return {a, b, resk * half, err, ang * half, ang_ok, depth};
            }

            // Global adaptive bisection on [a, b] with the given break points
            IntegralResult integrate(const std::vector<double> &breaks) const
            {
                std::vector<Panel> panels;
                for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
                    if (breaks[i + 1] > breaks[i])
                        panels.push_back(panel(breaks[i], breaks[i + 1], 0));

                IntegralResult out;
                constexpr std::size_t max_panels = 4000;
                while (true)
                {
                    double value = 0.0, err = 0.0;
                    for (const auto &p : panels)
                    {
                        value += p.value;
                        err += p.err;
                    }
                    const double tol = std::max(settings_.abs_tol, settings_.rel_tol * std::abs(value));
                    if (err <= tol)
                        break;
                    auto worst = std::max_element(panels.begin(), panels.end(),
                                                  [](const Panel &l, const Panel &r) { return l.err < r.err; });
                    if (worst->depth >= settings_.max_refinements || panels.size() >= max_panels)
                    {
                        out.converged = false;
                        break;
                    }
                    const Panel w = *worst;
                    const double mid = 0.5 * (w.a + w.b);
                    *worst = panel(w.a, mid, w.depth + 1);
                    panels.push_back(panel(mid, w.b, w.depth + 1));
                }
                for (const auto &p : panels)
                {
                    out.value += p.value;
                    out.err += p.err + p.ang_err;
                    out.converged = out.converged && p.ang_ok;
                }
                out.panels = int(panels.size());
                return out;
            }

        private:
            double apply(const AngularRule &rule, double d) const
            {
                double sum = 0.0;
                for (std::size_t i = 0; i < rule.weight.size(); ++i)
                    sum += rule.weight[i] * ctx_.hop2(d, rule.cos_theta[i]);
                return sum;
            }

            const IntegrandContext &ctx_;
            SecrecyTerm term_;
            const QuadratureSettings &settings_;
        };
    }

    IntegralResult integrate_secrecy_term(const SystemConfig &cfg, const CodePoint &cp, SecrecyTerm term,
                                          bool asymptotic, const QuadratureSettings &settings)
    {
        validate(cfg, cp);
        if (!(cp.tau_e() > 0.0))
            throw Error(ErrorCode::domain, "tau_e", "secrecy integrals require tau_e > 0 (the area integral diverges at 0)");
        if (!(settings.rel_tol > 0.0 && settings.rel_tol < 1.0) || !(settings.abs_tol > 0.0) ||
            settings.max_refinements < 1 || !(settings.truncation_tol > 0.0))
            throw Error(ErrorCode::violation, "settings", "VIOLATION(settings): quadrature settings must be positive, rel_tol < 1");

        const IntegrandContext ctx(cfg, cp, asymptotic);
        const double d_sr = cfg.d_sr;
        const int ne = cfg.n_e;

        // Tail bound beyond radius R (R >= d_sr) and a crude total bound for the initial choice of R
        auto tail = [&](double r)
        {
            const double t1 = envelope_tail(ne, cfg.eta, ctx.hop1_rate(), 0.0, r);
            const double t2 = envelope_tail(ne, cfg.eta, ctx.hop2_rate(), d_sr, r);
            switch (term)
            {
            case SecrecyTerm::j1:
                return t1;
            case SecrecyTerm::j2:
                return t2;
            case SecrecyTerm::j3:
                return std::min(t1, t2);
            }
            return t1;
        };
        const double inner_area = 0.5 * std::numbers::pi * d_sr * d_sr; // Integrand <= 1 below d_sr
        const double total_bound = std::min(
            {term != SecrecyTerm::j2 ? envelope_tail(ne, cfg.eta, ctx.hop1_rate(), 0.0, 0.0) : std::numeric_limits<double>::infinity(),
             term != SecrecyTerm::j1 ? envelope_tail(ne, cfg.eta, ctx.hop2_rate(), d_sr, d_sr) + inner_area : std::numeric_limits<double>::infinity()});

        double r_max = 2.0 * d_sr;
        for (int i = 0; i < 400 && tail(r_max) > settings.truncation_tol * total_bound; ++i)
            r_max *= 1.25;

        const SecrecyIntegrator integrator(ctx, term, settings);
        std::vector<double> breaks = {0.0};
        if (term != SecrecyTerm::j1)
            breaks.push_back(d_sr * d_sr);
        breaks.push_back(r_max * r_max);
        IntegralResult result = integrator.integrate(breaks);

        // Extend until the certified tail is small relative to the estimate itself
        for (int i = 0; i < 200; ++i)
        {
            const double t = tail(r_max);
            if (t <= settings.truncation_tol * std::abs(result.value) || t <= 1e-3 * settings.abs_tol)
                break;
            const double r_new = 1.25 * r_max;
            const auto annulus = integrator.integrate({r_max * r_max, r_new * r_new});
            result.value += annulus.value;
            result.err += annulus.err;
            result.converged = result.converged && annulus.converged;
            result.panels += annulus.panels;
            r_max = r_new;
        }
        result.r_max = r_max;
        result.err += tail(r_max);
        return result;
    }

    IntegralResult integral_j1_oracle(const SystemConfig &cfg, const CodePoint &cp, const QuadratureSettings &settings)
    {
        return integrate_secrecy_term(cfg, cp, SecrecyTerm::j1, false, settings);
    }

    IntegralResult integral_j2(const SystemConfig &cfg, const CodePoint &cp, const QuadratureSettings &settings)
    {
        return integrate_secrecy_term(cfg, cp, SecrecyTerm::j2, false, settings);
    }

    IntegralResult integral_j3(const SystemConfig &cfg, const CodePoint &cp, const QuadratureSettings &settings)
    {
        return integrate_secrecy_term(cfg, cp, SecrecyTerm::j3, false, settings);
    }

    IntegralResult integral_j2_inf(const SystemConfig &cfg, const CodePoint &cp, const QuadratureSettings &settings)
    {
        return integrate_secrecy_term(cfg, cp, SecrecyTerm::j2, true, settings);
    }

    IntegralResult integral_j3_inf(const SystemConfig &cfg, const CodePoint &cp, const QuadratureSettings &settings)
    {
        return integrate_secrecy_term(cfg, cp, SecrecyTerm::j3, true, settings);
    }
}
