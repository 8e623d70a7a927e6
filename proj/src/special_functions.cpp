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

#include "relaysec/special_functions.hpp"
#include "relaysec/errors.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace relaysec::special
{
    void CompensatedSum::add(double x)
    {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            compensation_ += (sum_ - t) + x;
        else
            compensation_ += (x - t) + sum_;
        sum_ = t;
    }

    double gamma_int(int k)
    {
        if (k < 1)
            throw Error(ErrorCode::domain, "gamma_int", "gamma_int: k must be >= 1, got " + std::to_string(k));
        double result = 1.0;
        for (int i = 2; i < k; ++i)
        {
            result *= i;
            if (!std::isfinite(result))
                throw Error(ErrorCode::overflow, "gamma_int",
                            "gamma_int: Gamma(" + std::to_string(k) + ") exceeds double range");
        }
        return result;
    }

    double gamma_real(double a)
    {
        if (!(a > 0.0))
            throw Error(ErrorCode::domain, "gamma_real", "gamma_real: argument must be > 0");
        return std::tgamma(a);
    }

    namespace
    {
        void check_args(int k, double x, const char *fn)
        {
            if (k < 1)
                throw Error(ErrorCode::domain, fn, std::string(fn) + ": k must be >= 1");
            if (!(x >= 0.0))
                throw Error(ErrorCode::domain, fn, std::string(fn) + ": x must be >= 0");
        }

        // exp(-x) sum_{z >= k} x^z / z!, all terms positive; used for x < k
        double exp_series_tail(int k, double x)
        {
            double term = std::exp(k * std::log(x) - x - std::lgamma(k + 1.0));
            CompensatedSum sum;
            for (int z = k; term > 0.0; ++z)
            {
                sum.add(term);
                if (term < sum.value() * 1e-17)
                    break;
                term *= x / (z + 1);
            }
            return sum.value();
        }
    }

    double regularized_lower_gamma(int k, double x)
    {
        check_args(k, x, "regularized_lower_gamma");
        if (x == 0.0)
            return 0.0;
        if (std::isinf(x))
            return 1.0;
        if (x < k)
            return std::min(1.0, exp_series_tail(k, x));
        // x >= k: Q(k, x) is at most ~0.5 and the subtraction is well conditioned
        return std::max(0.0, 1.0 - regularized_upper_gamma(k, x));
    }

    double regularized_upper_gamma(int k, double x)
    {
        check_args(k, x, "regularized_upper_gamma");
        if (x == 0.0)
            return 1.0;
        if (std::isinf(x))
            return 0.0;
        if (x < k)
            return std::max(0.0, 1.0 - exp_series_tail(k, x));
        // Head terms in log space so large x does not overflow x^z before exp(-x) damps it
        CompensatedSum sum;
        const double log_x = std::log(x);
        for (int z = 0; z < k; ++z)
            sum.add(std::exp(z * log_x - x - std::lgamma(z + 1.0)));
        return std::min(1.0, sum.value());
    }

    double lower_incomplete_gamma(int k, double x)
    {
        check_args(k, x, "lower_incomplete_gamma");
        return gamma_int(k) * regularized_lower_gamma(k, x);
    }

    double log_multi_gamma_product(int m, int n)
    {
        if (n < 1 || m < n)
            throw Error(ErrorCode::domain, "multi_gamma_product", "multi_gamma_product: requires m >= n >= 1");
        double out = 0.0;
        for (int i = 1; i <= n; ++i)
            out += std::lgamma(static_cast<double>(m - i + 1));
        return out;
    }

    double multi_gamma_product(int m, int n)
    {
        if (n < 1 || m < n)
            throw Error(ErrorCode::domain, "multi_gamma_product", "multi_gamma_product: requires m >= n >= 1");
        double out = 1.0;
        for (int i = 1; i <= n; ++i)
            out *= gamma_int(m - i + 1);
        if (!std::isfinite(out))
            throw Error(ErrorCode::overflow, "multi_gamma_product", "multi_gamma_product: result exceeds double range");
        return out;
    }

    double binomial(int n, int k)
    {
        if (k < 0 || k > n)
            return 0.0;
        k = std::min(k, n - k);
        double out = 1.0;
        for (int i = 1; i <= k; ++i)
            out = out * (n - k + i) / i;
        return out < 9.0e15 ? std::round(out) : out;
    }

    double power_ratio(double y, int l, int L)
    {
        if (y == 0.0)
            return l == 0 ? 1.0 : 0.0;
        if (y < 1.0)
            return std::pow(y, l) * std::exp(-L * std::log1p(y));
        return std::exp(l * std::log(y) - L * std::log1p(y));
    }

    LogDeterminant log_determinant(const SmallMatrix &m)
    {
        if (m.n_rows != m.n_cols || m.n_rows == 0)
            throw Error(ErrorCode::domain, "determinant", "determinant: matrix must be square and non-empty");
        if (!m.is_finite())
            throw Error(ErrorCode::domain, "determinant", "determinant: entries must be finite");

        // Doolittle LU with partial pivoting, in place on a copy
        SmallMatrix a = m;
        const arma::uword n = a.n_rows;
        double sign = 1.0;
        double log_abs = 0.0;
        for (arma::uword col = 0; col < n; ++col)
        {
            arma::uword pivot = col;
            for (arma::uword r = col + 1; r < n; ++r)
                if (std::abs(a(r, col)) > std::abs(a(pivot, col)))
                    pivot = r;
            if (a(pivot, col) == 0.0)
                return {-std::numeric_limits<double>::infinity(), 0.0};
            if (pivot != col)
            {
                a.swap_rows(pivot, col);
                sign = -sign;
            }
            const double d = a(col, col);
            if (d < 0.0)
                sign = -sign;
            log_abs += std::log(std::abs(d));
            for (arma::uword r = col + 1; r < n; ++r)
            {
                const double f = a(r, col) / d;
                if (f == 0.0)
                    continue;
                for (arma::uword c = col + 1; c < n; ++c)
                    a(r, c) -= f * a(col, c);
            }
        }
        return {log_abs, sign};
    }

    double determinant(const SmallMatrix &m)
    {
        const auto ld = log_determinant(m);
        if (ld.sign == 0.0)
            return 0.0;
        return ld.sign * std::exp(ld.log_abs);
    }
}
