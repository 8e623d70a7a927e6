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

#include "relaysec/eaves_cdf.hpp"

#include <cmath>

using namespace relaysec;
using Catch::Approx;

namespace
{
    SystemConfig single_antenna_eaves()
    {
        SystemConfig cfg;
        cfg.n_s = 4;
        cfg.n_r = 3;
        cfg.n_e = 1;
        return cfg;
    }
}

TEST_CASE("Eavesdropper CDF - geometry")
{
    const auto g = EavesGeometry::from_polar(10.0, 10.0, 0.0);
    CHECK(g.d_si == 10.0);
    CHECK(g.d_ri == 0.0);
    CHECK(EavesGeometry::from_polar(10.0, 5.0, M_PI).d_ri == Approx(15.0));
    CHECK(EavesGeometry::from_polar(3.0, 4.0, M_PI / 2).d_ri == Approx(5.0));
}

TEST_CASE("Eavesdropper CDF - single eavesdropper antenna closed forms")
{
    // One receive antenna: SINR = |h w|^2 / (1 + sum of exponential interferers)
    const auto cfg = single_antenna_eaves();
    CodePoint cp;
    cp.beta_s = 0.3;
    cp.beta_r = 0.6;
    const auto ds = derive(cfg, cp);
    for (double d_si : {3.0, 12.0, 40.0})
        for (double theta : {0.2, 1.5, 3.0})
        {
            const auto geo = EavesGeometry::from_polar(cfg.d_sr, d_si, theta);
            for (double gamma : {0.0, 0.01, 0.5, 2.0, 30.0})
            {
                const double x1 = gamma * cfg.sigma2_i1 * std::pow(d_si, cfg.eta) / (cp.beta_s * cfg.p_s);
                const double s1 = std::exp(-x1) * std::pow(1.0 + ds.kappa_1 * gamma, -(cfg.n_s - 1));
                CHECK(survival_si(cfg, cp, geo, gamma) == Approx(s1).epsilon(1e-13).margin(1e-300));

                const double x2 = gamma * cfg.sigma2_i2 * std::pow(geo.d_ri, cfg.eta) / (cp.beta_r * cfg.p_r);
                const double y3 = gamma * cfg.p_s * std::pow(geo.d_ri / d_si, cfg.eta) / (cp.beta_r * cfg.p_r * cfg.n_s);
                const double s2 = std::exp(-x2) * std::pow(1.0 + ds.kappa_2 * gamma, -(cfg.n_r - 1)) *
                                  std::pow(1.0 + y3, -cfg.n_s);
                CHECK(survival_ri(cfg, cp, geo, gamma) == Approx(s2).epsilon(1e-13).margin(1e-300));
                CHECK(f_gamma_si(cfg, cp, geo, gamma) + survival_si(cfg, cp, geo, gamma) == Approx(1.0));
            }
        }
}

TEST_CASE("Eavesdropper CDF - interference-free limit is Erlang")
{
    // beta = 1 and no source jamming: survival of a Gamma(N_e, 1) variable at x
    SystemConfig cfg;
    cfg.n_s = 5;
    cfg.n_e = 3;
    CodePoint cp;
    cp.beta_s = 1.0;
    const auto geo = EavesGeometry::from_polar(cfg.d_sr, 7.0, 1.0);
    const double gamma = 2.0;
    const double x = gamma / gbar_si(cfg, geo);
    const double q = std::exp(-x) * (1.0 + x + x * x / 2.0);
    CHECK(survival_si(cfg, cp, geo, gamma) == Approx(q).epsilon(1e-13));
}

TEST_CASE("Eavesdropper CDF - monotonicity")
{
    SystemConfig cfg;
    cfg.n_s = 6;
    cfg.n_r = 3;
    cfg.n_e = 3;
    const auto geo = EavesGeometry::from_polar(cfg.d_sr, 9.0, 0.8);

    CodePoint cp;
    double prev_si = 0.0, prev_ri = 0.0;
    for (double g = 0.0; g <= 50.0; g += 0.25)
    {
        const double fsi = f_gamma_si(cfg, cp, geo, g);
        const double fri = f_gamma_ri(cfg, cp, geo, g);
        CHECK(fsi >= prev_si - 1e-15);
        CHECK(fri >= prev_ri - 1e-15);
        CHECK(fsi <= 1.0);
        prev_si = fsi;
        prev_ri = fri;
    }
    CHECK(f_gamma_si(cfg, cp, geo, 0.0) == 0.0);
    CHECK(f_gamma_ri(cfg, cp, geo, 0.0) == 0.0);

    // More artificial noise (smaller beta, larger kappa) lowers the eavesdropper SINR
    double prev = 0.0;
    for (double beta : {1.0, 0.8, 0.5, 0.3, 0.1})
    {
        CodePoint c;
        c.beta_s = beta;
        c.beta_r = beta;
        const double f = f_gamma_si(cfg, c, geo, 1.0);
        CHECK(f >= prev);
        prev = f;
    }
    prev = 0.0;
    for (double beta : {1.0, 0.8, 0.5, 0.3, 0.1})
    {
        CodePoint c;
        c.beta_r = beta;
        const double f = f_gamma_ri(cfg, c, geo, 1.0);
        CHECK(f >= prev);
        prev = f;
    }

    // Farther eavesdroppers see less signal
    prev = 0.0;
    for (double d = 1.0; d <= 80.0; d *= 1.3)
    {
        const double f = f_gamma_si(cfg, cp, EavesGeometry{d, 1.0}, 1.0);
        CHECK(f >= prev);
        prev = f;
    }
}

TEST_CASE("Eavesdropper CDF - domain")
{
    SystemConfig cfg;
    CodePoint cp;
    CHECK_THROWS_AS(f_gamma_si(cfg, cp, EavesGeometry{0.0, 1.0}, 1.0), Error);
    CHECK_THROWS_AS(f_gamma_ri(cfg, cp, EavesGeometry{1.0, 1.0}, -1.0), Error);
}
