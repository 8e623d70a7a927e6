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

#ifndef RELAYSEC_EAVES_CDF_HPP
#define RELAYSEC_EAVES_CDF_HPP

#include "relaysec/model.hpp"

namespace relaysec
{
    // Location of one eavesdropper relative to source and relay
    struct EavesGeometry
    {
        double d_si; // Source-eavesdropper distance
        double d_ri; // Relay-eavesdropper distance

        // Relay sits at polar angle 0, distance d_sr from the source
        static EavesGeometry from_polar(double d_sr, double d_si, double theta);
    };

    double gbar_si(const SystemConfig &cfg, const EavesGeometry &geo); // P_s d_si^-eta / sigma_i1^2
    double gbar_ri(const SystemConfig &cfg, const EavesGeometry &geo); // P_r d_ri^-eta / sigma_i2^2

    // Ratio of per-antenna source jamming power to relay information power at the eavesdropper
    double kappa_3(const SystemConfig &cfg, const CodePoint &cp, const EavesGeometry &geo);

    // MMSE SINR CDFs at a fixed eavesdropper location. First hop: source AN only.
    // Second hop: relay AN in N_r - 1 dimensions plus isotropic source jamming in N_s dimensions.
    double f_gamma_si(const SystemConfig &cfg, const CodePoint &cp, const EavesGeometry &geo, double gamma);
    double f_gamma_ri(const SystemConfig &cfg, const CodePoint &cp, const EavesGeometry &geo, double gamma);

    // Complementary CDFs, evaluated directly (no 1 - F cancellation)
    double survival_si(const SystemConfig &cfg, const CodePoint &cp, const EavesGeometry &geo, double gamma);
    double survival_ri(const SystemConfig &cfg, const CodePoint &cp, const EavesGeometry &geo, double gamma);
}

#endif
