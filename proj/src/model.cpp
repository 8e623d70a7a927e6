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

#include "relaysec/model.hpp"

#include <cmath>
#include <numbers>

namespace relaysec
{
    const char *to_string(ErrorCode code)
    {
        switch (code)
        {
        case ErrorCode::violation:
            return "VIOLATION";
        case ErrorCode::domain:
            return "DOMAIN";
        case ErrorCode::overflow:
            return "OVERFLOW";
        case ErrorCode::numerical_inconsistency:
            return "NUMERICAL_INCONSISTENCY";
        case ErrorCode::nonconverged:
            return "NONCONVERGED";
        case ErrorCode::degenerate:
            return "DEGENERATE";
        case ErrorCode::solve_failure:
            return "SOLVE_FAILURE";
        }
        return "UNKNOWN";
    }

    double rate_to_threshold(double rate)
    {
        return std::expm1(rate * std::numbers::ln2);
    }

    double threshold_to_rate(double tau)
    {
        return std::log1p(tau) / std::numbers::ln2;
    }

    double db_to_linear(double db)
    {
        return std::pow(10.0, db / 10.0);
    }

    double linear_to_db(double value)
    {
        return 10.0 * std::log10(value);
    }

    double CodePoint::tau_b() const { return rate_to_threshold(r_b); }
    double CodePoint::tau_e() const { return rate_to_threshold(r_e); }

    namespace
    {
        [[noreturn]] void fail(const std::string &field, const std::string &why)
        {
            throw Error(ErrorCode::violation, field, "VIOLATION(" + field + "): " + why);
        }

        void require_positive_int(int value, const char *field)
        {
            if (value < 1)
                fail(field, "antenna count must be a positive integer");
        }

        void require_positive(double value, const char *field)
        {
            if (!std::isfinite(value) || !(value > 0.0))
                fail(field, "must be finite and strictly positive");
        }
    }

    const SystemConfig &validate(const SystemConfig &cfg)
    {
        require_positive_int(cfg.n_s, "n_s");
        require_positive_int(cfg.n_r, "n_r");
        require_positive_int(cfg.n_d, "n_d");
        require_positive_int(cfg.n_e, "n_e");
        if (cfg.n_s <= cfg.n_e)
            fail("n_s>n_e", "the source must have more antennas than each eavesdropper (model assumption n_s > n_e)");
        require_positive(cfg.eta, "eta");
        if (!std::isfinite(cfg.lambda) || cfg.lambda < 0.0)
            fail("lambda", "eavesdropper density must be finite and non-negative");
        require_positive(cfg.d_sr, "d_sr");
        require_positive(cfg.d_rd, "d_rd");
        require_positive(cfg.p_s, "p_s");
        require_positive(cfg.p_r, "p_r");
        require_positive(cfg.sigma2_r, "sigma2_r");
        require_positive(cfg.sigma2_d, "sigma2_d");
        require_positive(cfg.sigma2_i1, "sigma2_i1");
        require_positive(cfg.sigma2_i2, "sigma2_i2");
        return cfg;
    }

    const CodePoint &validate(const CodePoint &cp)
    {
        if (!std::isfinite(cp.r_b) || cp.r_b < 0.0)
            fail("r_b", "transmission rate must be finite and non-negative");
        if (!std::isfinite(cp.r_e) || cp.r_e < 0.0 || cp.r_e > cp.r_b)
            fail("r_e", "redundancy rate must lie in [0, r_b]");
        if (!(cp.beta_s > 0.0 && cp.beta_s <= 1.0))
            fail("beta_s", "power fraction must lie in (0, 1]");
        if (!(cp.beta_r > 0.0 && cp.beta_r <= 1.0))
            fail("beta_r", "power fraction must lie in (0, 1]");
        return cp;
    }

    void validate(const SystemConfig &cfg, const CodePoint &cp)
    {
        validate(cfg);
        validate(cp);
        if (cfg.n_s == 1 && cp.beta_s != 1.0)
            fail("beta_s", "a single source antenna has no AN dimensions, beta_s must be 1");
        if (cfg.n_r == 1 && cp.beta_r != 1.0)
            fail("beta_r", "a single relay antenna has no AN dimensions, beta_r must be 1");
    }

    DerivedScalars derive(const SystemConfig &cfg, const CodePoint &cp)
    {
        DerivedScalars out{};
        out.gbar_sr = cfg.p_s * std::pow(cfg.d_sr, -cfg.eta) / cfg.sigma2_r;
        out.gbar_rd = cfg.p_r * std::pow(cfg.d_rd, -cfg.eta) / cfg.sigma2_d;
        out.kappa_1 = cfg.n_s > 1 ? (1.0 - cp.beta_s) / (cp.beta_s * (cfg.n_s - 1)) : 0.0;
        out.kappa_2 = cfg.n_r > 1 ? (1.0 - cp.beta_r) / (cp.beta_r * (cfg.n_r - 1)) : 0.0;
        return out;
    }
}
