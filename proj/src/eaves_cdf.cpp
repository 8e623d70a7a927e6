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

#include "relaysec/eaves_cdf.hpp"
#include "relaysec/special_functions.hpp"

#include <algorithm>
#include <cmath>

namespace relaysec
{
    using special::binomial;
    using special::CompensatedSum;
    using special::power_ratio;

    EavesGeometry EavesGeometry::from_polar(double d_sr, double d_si, double theta)
    {
        const double d2 = d_sr * d_sr + d_si * d_si - 2.0 * d_sr * d_si * std::cos(theta);
        return {d_si, std::sqrt(std::max(d2, 0.0))};
    }

    double gbar_si(const SystemConfig &cfg, const EavesGeometry &geo)
    {
        return cfg.p_s * std::pow(geo.d_si, -cfg.eta) / cfg.sigma2_i1;
    }

    double gbar_ri(const SystemConfig &cfg, const EavesGeometry &geo)
    {
        return cfg.p_r * std::pow(geo.d_ri, -cfg.eta) / cfg.sigma2_i2;
    }

    double kappa_3(const SystemConfig &cfg, const CodePoint &cp, const EavesGeometry &geo)
    {
        return cfg.p_s * std::pow(geo.d_ri / geo.d_si, cfg.eta) / (cp.beta_r * cfg.p_r * cfg.n_s);
    }

    namespace
    {
        void check(const EavesGeometry &geo, double gamma, const char *fn)
        {
            if (!(gamma >= 0.0))
                throw Error(ErrorCode::domain, fn, std::string(fn) + ": gamma must be >= 0");
            if (!(geo.d_si > 0.0) || !(geo.d_ri > 0.0))
                throw Error(ErrorCode::domain, fn, std::string(fn) + ": distances must be > 0");
        }

        // x^(p-1) / Gamma(p) for p >= 1, with 0^0 = 1
        double erlang_term(double x, int p)
        {
            if (p == 1)
                return 1.0;
            if (x == 0.0)
                return 0.0;
            return std::exp((p - 1) * std::log(x) - std::lgamma(double(p)));
        }
    }

    double survival_si(const SystemConfig &cfg, const CodePoint &cp, const EavesGeometry &geo, double gamma)
    {
        check(geo, gamma, "survival_si");
        const auto ds = derive(cfg, cp);
        const double x = gamma / (cp.beta_s * gbar_si(cfg, geo));
        const double y = ds.kappa_1 * gamma;
        const int n_an = cfg.n_s - 1;

        CompensatedSum outer;
        for (int p = 1; p <= cfg.n_e; ++p)
        {
            CompensatedSum inner;
            for (int q = 0; q <= cfg.n_e - p; ++q)
                inner.add(binomial(n_an, q) * power_ratio(y, q, n_an));
            outer.add(erlang_term(x, p) * inner.value());
        }
        return std::clamp(std::exp(-x) * outer.value(), 0.0, 1.0);
    }

    double survival_ri(const SystemConfig &cfg, const CodePoint &cp, const EavesGeometry &geo, double gamma)
    {
        check(geo, gamma, "survival_ri");
        const auto ds = derive(cfg, cp);
        const double x = gamma / (cp.beta_r * gbar_ri(cfg, geo));
        const double y2 = ds.kappa_2 * gamma;
        const double y3 = kappa_3(cfg, cp, geo) * gamma;
        const int n_ran = cfg.n_r - 1;

        CompensatedSum outer;
        for (int m = 1; m <= cfg.n_e; ++m)
        {
            CompensatedSum middle;
            for (int n = 0; n <= cfg.n_e - m; ++n)
            {
                CompensatedSum inner;
                for (int l = 0; l <= cfg.n_e - m - n; ++l)
                    inner.add(binomial(cfg.n_s, l) * power_ratio(y3, l, cfg.n_s));
                middle.add(binomial(n_ran, n) * power_ratio(y2, n, n_ran) * inner.value());
            }
            outer.add(erlang_term(x, m) * middle.value());
        }
        return std::clamp(std::exp(-x) * outer.value(), 0.0, 1.0);
    }

    double f_gamma_si(const SystemConfig &cfg, const CodePoint &cp, const EavesGeometry &geo, double gamma)
    {
        return 1.0 - survival_si(cfg, cp, geo, gamma);
    }

    double f_gamma_ri(const SystemConfig &cfg, const CodePoint &cp, const EavesGeometry &geo, double gamma)
    {
        return 1.0 - survival_ri(cfg, cp, geo, gamma);
    }
}
