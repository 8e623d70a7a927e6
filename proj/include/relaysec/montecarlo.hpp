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

#ifndef RELAYSEC_MONTECARLO_HPP
#define RELAYSEC_MONTECARLO_HPP

#include "relaysec/eaves_cdf.hpp"
#include "relaysec/model.hpp"
#include "relaysec/outage.hpp"
#include "relaysec/wishart.hpp"

#include <algorithm>
#include <armadillo>
#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace relaysec::mc
{
    using Rng = std::mt19937_64;

    // Independent stream for one (master seed, trial index) pair
    Rng make_stream(std::uint64_t seed, std::uint64_t index);

    // i.i.d. CN(0, 1) entries
    arma::cx_mat sample_gaussian(arma::uword rows, arma::uword cols, Rng &rng);

    struct ChannelRealization
    {
        arma::cx_mat h_sr;              // N_r x N_s
        arma::cx_mat h_rd;              // N_d x N_r
        std::vector<arma::cx_mat> h_si; // N_e x N_s, one per eavesdropper
        std::vector<arma::cx_mat> h_ri; // N_e x N_r, one per eavesdropper
    };

    struct Beamformers
    {
        arma::cx_vec w_s;   // N_s, principal eigenvector of H_sr^H H_sr
        arma::cx_mat w_san; // N_s x (N_s - 1), remaining eigenvectors
        arma::cx_vec w_r;   // N_r, principal eigenvector of H_rd^H H_rd
        arma::cx_mat w_ran; // N_r x (N_r - 1)
        double lam_sr = 0.0;
        double lam_rd = 0.0;
    };

    struct PolarPosition
    {
        double d_si;  // Distance from the source
        double theta; // Angle in [0, 2 pi), relay at 0
    };

    ChannelRealization sample_channels(const SystemConfig &cfg, std::size_t n_eaves, Rng &rng);

    // Eigen-beamformers; each eigenvector's largest-magnitude entry is made real-positive
    Beamformers build_beamformers(const ChannelRealization &ch);

    // (gamma_sr, gamma_rd); Gamma_D is their minimum
    std::pair<double, double> main_link_snrs(const SystemConfig &cfg, const CodePoint &cp, const Beamformers &bf);

    // MMSE SINRs (gamma_si, gamma_ri) of one eavesdropper
    std::pair<double, double> eaves_sinrs(const SystemConfig &cfg, const CodePoint &cp, const arma::cx_mat &h_si,
                                          const arma::cx_mat &h_ri, const Beamformers &bf, const EavesGeometry &geo);

    // Homogeneous PPP on the disk of radius r_sim around the source
    std::vector<PolarPosition> sample_ppp(double lambda, double r_sim, Rng &rng);

    // Radius beyond which eavesdroppers change P_so(tau_e) by at most tol (envelope bound).
    // Thresholds above tau_e need no larger radius.
    double certified_radius(const SystemConfig &cfg, const CodePoint &cp, double tol = 1e-4);

    struct Interval
    {
        double lo, hi;
    };

    // Wilson score interval for a binomial proportion
    Interval wilson_interval(std::int64_t events, std::int64_t trials, double z);

    inline constexpr double z95 = 1.959963984540054;
    inline constexpr double z99 = 2.5758293035489004;

    struct Settings
    {
        std::int64_t trials = 10000;
        std::uint64_t seed = 1;
        double r_sim = 0.0; // 0 selects the certified radius at the smallest tau_e
        int jobs = 1;
        double z = z95;     // Interval width reported in OutageEstimate::err
    };

    // Per-trial end-to-end SNR and best eavesdropper SINR. Without tau_e values the eavesdroppers
    // are skipped and gamma_e is 0.
    struct TrialSamples
    {
        std::vector<double> gamma_d;
        std::vector<double> gamma_e; // Exact when > eaves_floor, otherwise only known to be <= it
        double eaves_floor = 0.0;
        double r_sim = 0.0;
    };

    // gamma_e is computed exactly only for eavesdroppers whose interference-free bound exceeds
    // eaves_floor; that leaves every indicator {Gamma_E > tau_e}, tau_e >= eaves_floor, unchanged.
    TrialSamples simulate(const SystemConfig &cfg, const CodePoint &cp, double eaves_floor, bool with_eaves,
                          const Settings &settings);

    struct OutageCurves
    {
        std::vector<OutageEstimate> p_to; // One per tau_b
        std::vector<OutageEstimate> p_so; // One per tau_e
        double r_sim = 0.0;
    };

    // Common random numbers: one simulation is counted against every threshold
    OutageCurves estimate_outage_curves(const SystemConfig &cfg, const CodePoint &cp, const std::vector<double> &tau_b,
                                        const std::vector<double> &tau_e, const Settings &settings);

    // Single code point form
    std::pair<OutageEstimate, OutageEstimate> estimate_outage(const SystemConfig &cfg, const CodePoint &cp,
                                                              const Settings &settings);

    // Samples of (gamma_si, gamma_ri) at a fixed eavesdropper location over fresh channels
    std::pair<std::vector<double>, std::vector<double>> sample_eaves_sinrs(const SystemConfig &cfg, const CodePoint &cp,
                                                                           const EavesGeometry &geo, std::int64_t draws,
                                                                           std::uint64_t seed);

    // Largest eigenvalue of G^H G for u x v standard complex Gaussian G
    std::vector<double> sample_largest_eigenvalues(const WishartDims &dims, std::int64_t draws, std::uint64_t seed);

    // Kolmogorov-Smirnov distance between samples and a CDF
    template <typename Cdf>
    double ks_distance(std::vector<double> samples, Cdf cdf)
    {
        std::sort(samples.begin(), samples.end());
        const double n = double(samples.size());
        double d = 0.0;
        for (std::size_t i = 0; i < samples.size(); ++i)
        {
            const double f = cdf(samples[i]);
            d = std::max({d, std::abs(f - double(i) / n), std::abs(double(i + 1) / n - f)});
        }
        return d;
    }
}

#endif
