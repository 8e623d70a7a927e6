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

#include "relaysec/wishart.hpp"
#include "relaysec/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace relaysec
{
    WishartDims WishartDims::from_antennas(int a, int b)
    {
        if (a < 1 || b < 1)
            throw Error(ErrorCode::domain, "WishartDims", "WishartDims: antenna counts must be >= 1");
        const int u = std::min(a, b);
        const int v = std::max(a, b);
        return {u, v, v - u};
    }

    double largest_eig_cdf(const WishartDims &dims, double x)
    {
        if (!(x >= 0.0))
            throw Error(ErrorCode::domain, "largest_eig_cdf", "largest_eig_cdf: x must be >= 0");
        if (x == 0.0)
            return 0.0;

        const int u = dims.u;
        special::SmallMatrix m(u, u);
        for (int i = 1; i <= u; ++i)
            for (int j = 1; j <= u; ++j)
            {
                const int k = dims.g(i, j);
                const double scale = std::exp(std::lgamma(double(k)) - std::lgamma(double(dims.t + i)) - std::lgamma(double(j)));
                m(i - 1, j - 1) = scale * special::regularized_lower_gamma(k, x);
            }

        const double cdf = special::determinant(m);
        constexpr double slack = 1e-9;
        if (!(cdf >= -slack && cdf <= 1.0 + slack))
            throw Error(ErrorCode::numerical_inconsistency, "largest_eig_cdf",
                        "largest_eig_cdf: CDF value " + std::to_string(cdf) + " outside [0, 1]");
        return std::clamp(cdf, 0.0, 1.0);
    }

    double f_gamma_sr(const SystemConfig &cfg, const CodePoint &cp, double gamma)
    {
        if (!(gamma >= 0.0))
            throw Error(ErrorCode::domain, "f_gamma_sr", "f_gamma_sr: gamma must be >= 0");
        const auto ds = derive(cfg, cp);
        return largest_eig_cdf(WishartDims::from_antennas(cfg.n_s, cfg.n_r), gamma / (cp.beta_s * ds.gbar_sr));
    }

    double f_gamma_rd(const SystemConfig &cfg, const CodePoint &cp, double gamma)
    {
        if (!(gamma >= 0.0))
            throw Error(ErrorCode::domain, "f_gamma_rd", "f_gamma_rd: gamma must be >= 0");
        const auto ds = derive(cfg, cp);
        return largest_eig_cdf(WishartDims::from_antennas(cfg.n_r, cfg.n_d), gamma / (cp.beta_r * ds.gbar_rd));
    }
}
