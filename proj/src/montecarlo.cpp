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

#include "relaysec/montecarlo.hpp"
#include "relaysec/parallel.hpp"
#include "relaysec/quadrature.hpp"

#include <numbers>
#include <string>

namespace relaysec::mc
{
    namespace
    {
        std::uint64_t splitmix64(std::uint64_t x)
        {
            x += 0x9E3779B97F4A7C15ULL;
            x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
            x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
            return x ^ (x >> 31);
        }

        double power_decay(double d, double eta)
        {
            return eta == 4.0 ? 1.0 / (d * d * d * d) : std::pow(d, -eta);
        }

        // Make the largest-magnitude entry of each column real-positive
        void fix_phase(arma::cx_mat &v)
        {
            for (arma::uword j = 0; j < v.n_cols; ++j)
            {
                const arma::uword k = arma::abs(v.col(j)).eval().index_max();
                const double mag = std::abs(v(k, j));
                if (mag > 0.0)
                    v.col(j) *= std::conj(v(k, j)) / mag;
            }
        }

        void principal_split(const arma::cx_mat &h, arma::cx_vec &w, arma::cx_mat &w_an, double &lam)
        {
            arma::cx_mat gram = h.t() * h;
            gram = 0.5 * (gram + gram.t());
            arma::vec vals;
            arma::cx_mat vecs;
            if (!arma::eig_sym(vals, vecs, gram))
                throw Error(ErrorCode::degenerate, "build_beamformers", "DEGENERATE: Hermitian eigensolver failed to converge");
            fix_phase(vecs);
            const arma::uword n = vecs.n_cols;
            lam = std::max(vals(n - 1), 0.0); // Ascending order
            w = vecs.col(n - 1);
            w_an = n > 1 ? arma::cx_mat(vecs.cols(0, n - 2)) : arma::cx_mat(h.n_cols, 0);
        }

        // c g^H K^-1 g for Hermitian positive-definite K
        double mmse_quadratic(const arma::cx_mat &k, const arma::cx_vec &g, double c, const char *fn)
        {
            arma::cx_vec x;
            if (!arma::solve(x, k, g, arma::solve_opts::likely_sympd + arma::solve_opts::no_approx))
                throw Error(ErrorCode::solve_failure, fn, std::string("SOLVE_FAILURE: interference covariance in ") + fn);
            return std::max(c * std::real(arma::cdot(g, x)), 0.0);
        }
    }

    Rng make_stream(std::uint64_t seed, std::uint64_t index)
    {
        return Rng(splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632BE59BD9B4E019ULL)));
    }

    arma::cx_mat sample_gaussian(arma::uword rows, arma::uword cols, Rng &rng)
    {
        std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
        arma::cx_mat m(rows, cols);
        for (arma::uword j = 0; j < cols; ++j)
            for (arma::uword i = 0; i < rows; ++i)
            {
                const double re = normal(rng);
                m(i, j) = {re, normal(rng)};
            }
        return m;
    }

    ChannelRealization sample_channels(const SystemConfig &cfg, std::size_t n_eaves, Rng &rng)
    {
        ChannelRealization ch;
        ch.h_sr = sample_gaussian(cfg.n_r, cfg.n_s, rng);
        ch.h_rd = sample_gaussian(cfg.n_d, cfg.n_r, rng);
        for (std::size_t i = 0; i < n_eaves; ++i)
        {
            ch.h_si.push_back(sample_gaussian(cfg.n_e, cfg.n_s, rng));
            ch.h_ri.push_back(sample_gaussian(cfg.n_e, cfg.n_r, rng));
        }
        return ch;
    }

    Beamformers build_beamformers(const ChannelRealization &ch)
    {
        Beamformers bf;
        principal_split(ch.h_sr, bf.w_s, bf.w_san, bf.lam_sr);
        principal_split(ch.h_rd, bf.w_r, bf.w_ran, bf.lam_rd);
        return bf;
    }

    std::pair<double, double> main_link_snrs(const SystemConfig &cfg, const CodePoint &cp, const Beamformers &bf)
    {
        const auto ds = derive(cfg, cp);
        return {cp.beta_s * ds.gbar_sr * bf.lam_sr, cp.beta_r * ds.gbar_rd * bf.lam_rd};
    }

    std::pair<double, double> eaves_sinrs(const SystemConfig &cfg, const CodePoint &cp, const arma::cx_mat &h_si,
                                          const arma::cx_mat &h_ri, const Beamformers &bf, const EavesGeometry &geo)
    {
        const double loss_si = power_decay(geo.d_si, cfg.eta);
        const double loss_ri = power_decay(geo.d_ri, cfg.eta);
        const arma::uword ne = h_si.n_rows;

        arma::cx_mat k_si = cfg.sigma2_i1 * arma::eye<arma::cx_mat>(ne, ne);
        if (cfg.n_s > 1)
        {
            const arma::cx_mat an = h_si * bf.w_san;
            k_si += (1.0 - cp.beta_s) * cfg.p_s / (cfg.n_s - 1) * loss_si * (an * an.t());
        }
        const double g_si = mmse_quadratic(k_si, h_si * bf.w_s, cp.beta_s * cfg.p_s * loss_si, "eaves_sinrs");

        arma::cx_mat k_ri = cfg.sigma2_i2 * arma::eye<arma::cx_mat>(ne, ne);
        if (cfg.n_r > 1)
        {
            const arma::cx_mat an = h_ri * bf.w_ran;
            k_ri += (1.0 - cp.beta_r) * cfg.p_r / (cfg.n_r - 1) * loss_ri * (an * an.t());
        }
        k_ri += cfg.p_s / cfg.n_s * loss_si * (h_si * h_si.t());
        const double g_ri = mmse_quadratic(k_ri, h_ri * bf.w_r, cp.beta_r * cfg.p_r * loss_ri, "eaves_sinrs");
        return {g_si, g_ri};
    }

    std::vector<PolarPosition> sample_ppp(double lambda, double r_sim, Rng &rng)
    {
        std::vector<PolarPosition> out;
        if (lambda <= 0.0 || r_sim <= 0.0)
            return out;
        std::poisson_distribution<std::int64_t> count(lambda * std::numbers::pi * r_sim * r_sim);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        const std::int64_t n = count(rng);
        out.reserve(std::size_t(n));
        for (std::int64_t i = 0; i < n; ++i)
        {
            const double r = r_sim * std::sqrt(unif(rng));
            out.push_back({r, 2.0 * std::numbers::pi * unif(rng)});
        }
        return out;
    }

    double certified_radius(const SystemConfig &cfg, const CodePoint &cp, double tol)
    {
        validate(cfg, cp);
        if (cfg.lambda == 0.0)
            return 0.0;
        if (!(cp.tau_e() > 0.0))
            throw Error(ErrorCode::domain, "tau_e", "certified_radius: tau_e must be > 0");
        const IntegrandContext ctx(cfg, cp, false);
        // Full-plane tails of both hops; P(any outside eavesdropper succeeds) <= lambda * tail
        auto tail = [&](double r)
        {
            return 2.0 * (envelope_tail(cfg.n_e, cfg.eta, ctx.hop1_rate(), 0.0, r) +
                          envelope_tail(cfg.n_e, cfg.eta, ctx.hop2_rate(), cfg.d_sr, r));
        };
        double r = 2.0 * cfg.d_sr;
        for (int i = 0; i < 1000 && cfg.lambda * tail(r) > tol; ++i)
            r *= 1.05;
        return r;
    }

    Interval wilson_interval(std::int64_t events, std::int64_t trials, double z)
    {
        if (trials <= 0)
            return {0.0, 1.0};
        const double n = double(trials), p = double(events) / n, z2 = z * z;
        const double denom = 1.0 + z2 / n;
        const double centre = (p + z2 / (2.0 * n)) / denom;
        const double half = z / denom * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
        // The bound touching an all-or-nothing count is exact; rounding must not move it
        return {events == 0 ? 0.0 : std::max(0.0, centre - half), events == trials ? 1.0 : std::min(1.0, centre + half)};
    }

    TrialSamples simulate(const SystemConfig &cfg, const CodePoint &cp, double eaves_floor, bool with_eaves,
                          const Settings &settings)
    {
        validate(cfg, cp);
        if (settings.trials < 1)
            throw Error(ErrorCode::violation, "trials", "VIOLATION(trials): trials must be >= 1");

        TrialSamples out;
        out.eaves_floor = eaves_floor;
        with_eaves = with_eaves && cfg.lambda > 0.0;
        if (with_eaves)
        {
            CodePoint floor_cp = cp;
            floor_cp.r_e = threshold_to_rate(eaves_floor);
            floor_cp.r_b = std::max(floor_cp.r_b, floor_cp.r_e);
            out.r_sim = settings.r_sim > 0.0 ? settings.r_sim : certified_radius(cfg, floor_cp);
        }
        out.gamma_d.assign(std::size_t(settings.trials), 0.0);
        out.gamma_e.assign(std::size_t(settings.trials), 0.0);

        const double c_si = cp.beta_s * cfg.p_s / cfg.sigma2_i1;
        const double c_ri = cp.beta_r * cfg.p_r / cfg.sigma2_i2;

        parallel_for(settings.trials, settings.jobs, [&](std::int64_t begin, std::int64_t end)
                     {
            for (std::int64_t t = begin; t < end; ++t)
            {
                Rng rng = make_stream(settings.seed, std::uint64_t(t));
                const auto ch = sample_channels(cfg, 0, rng);
                const auto bf = build_beamformers(ch);
                const auto [g_sr, g_rd] = main_link_snrs(cfg, cp, bf);
                out.gamma_d[t] = std::min(g_sr, g_rd);
                if (!with_eaves)
                    continue;

                double best = 0.0;
                for (const auto &pos : sample_ppp(cfg.lambda, out.r_sim, rng))
                {
                    const arma::cx_mat h_si = sample_gaussian(cfg.n_e, cfg.n_s, rng);
                    const arma::cx_mat h_ri = sample_gaussian(cfg.n_e, cfg.n_r, rng);
                    const auto geo = EavesGeometry::from_polar(cfg.d_sr, pos.d_si, pos.theta);
                    if (!(geo.d_si > 0.0) || !(geo.d_ri > 0.0))
                        continue; // Probability-zero coincidence with a transmitter
                    // Interference-free SNRs bound the MMSE SINRs from above
                    const double ub_si = c_si * power_decay(geo.d_si, cfg.eta) * arma::norm(h_si * bf.w_s, 2) * arma::norm(h_si * bf.w_s, 2);
                    const double ub_ri = c_ri * power_decay(geo.d_ri, cfg.eta) * arma::norm(h_ri * bf.w_r, 2) * arma::norm(h_ri * bf.w_r, 2);
                    if (ub_si <= eaves_floor && ub_ri <= eaves_floor)
                        continue;
                    const auto [g_si, g_ri] = eaves_sinrs(cfg, cp, h_si, h_ri, bf, geo);
                    best = std::max({best, g_si, g_ri});
                }
                out.gamma_e[t] = best;
            } });
        return out;
    }

    OutageCurves estimate_outage_curves(const SystemConfig &cfg, const CodePoint &cp, const std::vector<double> &tau_b,
                                        const std::vector<double> &tau_e, const Settings &settings)
    {
        const bool with_eaves = !tau_e.empty();
        const double floor = with_eaves ? *std::min_element(tau_e.begin(), tau_e.end()) : 0.0;
        if (with_eaves && cfg.lambda > 0.0 && !(floor > 0.0))
            throw Error(ErrorCode::domain, "tau_e", "estimate_outage_curves: tau_e values must be > 0");
        const auto samples = simulate(cfg, cp, floor, with_eaves, settings);

        auto make = [&](std::int64_t events)
        {
            OutageEstimate e;
            e.kind = EstimateKind::monte_carlo;
            e.trials = settings.trials;
            e.events = events;
            e.value = double(events) / double(settings.trials);
            const auto ci = wilson_interval(events, settings.trials, settings.z);
            e.err = 0.5 * (ci.hi - ci.lo);
            return e;
        };

        OutageCurves out;
        out.r_sim = samples.r_sim;
        for (double t : tau_b)
            out.p_to.push_back(make(std::count_if(samples.gamma_d.begin(), samples.gamma_d.end(), [t](double g) { return g < t; })));
        for (double t : tau_e)
            out.p_so.push_back(make(std::count_if(samples.gamma_e.begin(), samples.gamma_e.end(), [t](double g) { return g > t; })));
        return out;
    }

    std::pair<OutageEstimate, OutageEstimate> estimate_outage(const SystemConfig &cfg, const CodePoint &cp,
                                                              const Settings &settings)
    {
        const double te = cp.tau_e();
        if (cfg.lambda > 0.0 && te == 0.0)
        {
            // Limit convention: with tau_e = 0 any eavesdropper succeeds almost surely
            auto c = estimate_outage_curves(cfg, cp, {cp.tau_b()}, {}, settings);
            OutageEstimate all;
            all.kind = EstimateKind::monte_carlo;
            all.trials = all.events = settings.trials;
            all.value = 1.0;
            return {c.p_to[0], all};
        }
        const auto c = estimate_outage_curves(cfg, cp, {cp.tau_b()}, {te}, settings);
        return {c.p_to[0], c.p_so[0]};
    }

    std::pair<std::vector<double>, std::vector<double>> sample_eaves_sinrs(const SystemConfig &cfg, const CodePoint &cp,
                                                                           const EavesGeometry &geo, std::int64_t draws,
                                                                           std::uint64_t seed)
    {
        validate(cfg, cp);
        std::vector<double> si(static_cast<std::size_t>(draws)), ri(static_cast<std::size_t>(draws));
        for (std::int64_t t = 0; t < draws; ++t)
        {
            Rng rng = make_stream(seed, std::uint64_t(t));
            const auto ch = sample_channels(cfg, 1, rng);
            const auto bf = build_beamformers(ch);
            std::tie(si[t], ri[t]) = eaves_sinrs(cfg, cp, ch.h_si[0], ch.h_ri[0], bf, geo);
        }
        return {si, ri};
    }

    std::vector<double> sample_largest_eigenvalues(const WishartDims &dims, std::int64_t draws, std::uint64_t seed)
    {
        std::vector<double> out(static_cast<std::size_t>(draws));
        const arma::uword u = arma::uword(dims.u), v = arma::uword(dims.v);
        for (std::int64_t t = 0; t < draws; ++t)
        {
            Rng rng = make_stream(seed, std::uint64_t(t));
            const arma::cx_mat g = sample_gaussian(u, v, rng);
            if (u == 1)
            {
                out[t] = std::real(arma::cdot(g, g));
                continue;
            }
            arma::cx_mat gram = g * g.t();
            gram = 0.5 * (gram + gram.t());
            arma::vec vals;
            if (!arma::eig_sym(vals, gram))
                throw Error(ErrorCode::degenerate, "sample_largest_eigenvalues", "DEGENERATE: eigensolver failed");
            out[t] = vals.max();
        }
        return out;
    }
}
