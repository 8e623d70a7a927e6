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

#ifndef RELAYSEC_OUTAGE_HPP
#define RELAYSEC_OUTAGE_HPP

#include "relaysec/model.hpp"
#include "relaysec/quadrature.hpp"

#include <cstddef>
#include <cstdint>

namespace relaysec
{
    enum class EstimateKind
    {
        analytic,
        asymptotic,
        monte_carlo
    };

    const char *to_string(EstimateKind kind);

    struct OutageEstimate
    {
        double value = 0.0;                         // Probability in [0, 1]
        EstimateKind kind = EstimateKind::analytic;
        double err = 0.0;                           // Quadrature error bound or MC confidence half-width
        std::int64_t trials = 0;                    // MC only
        std::int64_t events = 0;                    // MC only
        bool converged = true;                      // False if any quadrature ran out of budget
    };

    // Area integrals of the secrecy exponent; J1 is closed form, J2 and J3 by quadrature
    struct SecrecyIntegrals
    {
        double j1 = 0.0, j2 = 0.0, j3 = 0.0;
        double err = 0.0; // err_J2 + err_J3
        bool converged = true;
    };

    // Transmission outage, exact: F_sr + F_rd - F_sr F_rd at tau_b
    OutageEstimate p_to(const SystemConfig &cfg, const CodePoint &cp);

    // Limit N_s -> infinity: the relay-destination hop alone
    OutageEstimate p_to_asymptotic(const SystemConfig &cfg, const CodePoint &cp);

    // First-hop area integral in closed form; requires tau_e > 0
    double j1_closed(const SystemConfig &cfg, const CodePoint &cp);
    double j1_closed_asymptotic(const SystemConfig &cfg, const CodePoint &cp);

    // Memoized on the exact parameter tuple; safe to call from several threads
    SecrecyIntegrals secrecy_integrals(const SystemConfig &cfg, const CodePoint &cp, bool asymptotic,
                                       const QuadratureSettings &settings = {});

    // 1 - exp(-2 lambda (J1 + J2 - J3)). tau_e = 0 returns 1 by the limit convention.
    OutageEstimate p_so(const SystemConfig &cfg, const CodePoint &cp, const QuadratureSettings &settings = {});
    OutageEstimate p_so_asymptotic(const SystemConfig &cfg, const CodePoint &cp, const QuadratureSettings &settings = {});

    void clear_secrecy_cache();
    std::size_t secrecy_cache_size();
}

#endif
