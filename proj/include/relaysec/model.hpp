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

#ifndef RELAYSEC_MODEL_HPP
#define RELAYSEC_MODEL_HPP

#include "relaysec/errors.hpp"

namespace relaysec
{
    // Physical parameters of the two-hop link and the eavesdropper field.
    // All powers and noise variances are linear; dB conversion happens at the CLI boundary only.
    struct SystemConfig
    {
        int n_s = 4;             // Source antennas
        int n_r = 2;             // Relay antennas
        int n_d = 2;             // Destination antennas
        int n_e = 2;             // Antennas per eavesdropper, must be smaller than n_s
        double eta = 4.0;        // Path-loss exponent
        double lambda = 0.01;    // Eavesdropper density per unit area, 0 disables eavesdroppers
        double d_sr = 10.0;      // Source-relay distance
        double d_rd = 10.0;      // Relay-destination distance
        double p_s = 1.0e5;      // Source transmit power
        double p_r = 1.0e5;      // Relay transmit power
        double sigma2_r = 1.0;   // Noise variance at the relay
        double sigma2_d = 1.0;   // Noise variance at the destination
        double sigma2_i1 = 1.0;  // Eavesdropper noise variance, first hop
        double sigma2_i2 = 1.0;  // Eavesdropper noise variance, second hop

        bool operator==(const SystemConfig &) const = default;
    };

    // Wiretap code rates and information-power fractions.
    struct CodePoint
    {
        double r_b = 1.0;     // Transmission rate [bits/channel use]
        double r_e = 0.5;     // Redundancy rate, 0 <= r_e <= r_b
        double beta_s = 0.5;  // Fraction of source power carrying information
        double beta_r = 0.5;  // Fraction of relay power carrying information

        double tau_b() const; // SNR threshold 2^r_b - 1
        double tau_e() const; // SNR threshold 2^r_e - 1

        bool operator==(const CodePoint &) const = default;
    };

    struct DerivedScalars
    {
        double gbar_sr; // P_s d_sr^-eta / sigma_r^2
        double gbar_rd; // P_r d_rd^-eta / sigma_d^2
        double kappa_1; // Source AN-to-signal ratio per AN dimension
        double kappa_2; // Relay AN-to-signal ratio per AN dimension
    };

    // 2^rate - 1 without cancellation for small rates
    double rate_to_threshold(double rate);

    // Inverse of rate_to_threshold
    double threshold_to_rate(double tau);

    double db_to_linear(double db);
    double linear_to_db(double value);

    // Throws Error(violation) naming the first failing field. Returns the input unchanged.
    const SystemConfig &validate(const SystemConfig &cfg);
    const CodePoint &validate(const CodePoint &cp);

    // Joint check: also enforces beta_s = 1 when n_s = 1 and beta_r = 1 when n_r = 1,
    // since a single antenna leaves no null space for artificial noise.
    void validate(const SystemConfig &cfg, const CodePoint &cp);

    DerivedScalars derive(const SystemConfig &cfg, const CodePoint &cp);
}

#endif
