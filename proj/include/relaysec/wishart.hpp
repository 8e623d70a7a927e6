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

#ifndef RELAYSEC_WISHART_HPP
#define RELAYSEC_WISHART_HPP

#include "relaysec/model.hpp"

namespace relaysec
{
    // Dimensions of the central complex Wishart matrix H^H H for an a x b channel
    struct WishartDims
    {
        int u; // min(a, b)
        int v; // max(a, b)
        int t; // v - u

        static WishartDims from_antennas(int a, int b);

        int g(int i, int j) const { return t + i + j - 1; } // Gamma order of entry (i, j), 1-based
    };

    // CDF of the largest eigenvalue of a u x u / v-degree-of-freedom complex Wishart matrix with
    // unit-variance entries, at the normalized argument x (caller divides by beta * gbar).
    //
    // The determinant of the u x u incomplete-gamma matrix is evaluated after scaling row i by
    // 1 / Gamma(t + i) and column j by 1 / Gamma(j); the product of those scale factors is exactly
    // the normalizer Gamma_u(u) Gamma_v(u), so large antenna counts never overflow.
    // Throws numerical_inconsistency if the result leaves [0, 1] by more than 1e-9.
    double largest_eig_cdf(const WishartDims &dims, double x);

    double f_gamma_sr(const SystemConfig &cfg, const CodePoint &cp, double gamma); // CDF of the relay SNR
    double f_gamma_rd(const SystemConfig &cfg, const CodePoint &cp, double gamma); // CDF of the destination SNR
}

#endif
