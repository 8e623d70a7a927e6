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

#ifndef RELAYSEC_SPECIAL_FUNCTIONS_HPP
#define RELAYSEC_SPECIAL_FUNCTIONS_HPP

#include <armadillo>

namespace relaysec::special
{
    using SmallMatrix = arma::mat; // Square, dimension = min antenna count

    // Neumaier-compensated running sum
    class CompensatedSum
    {
    public:
        void add(double x);
        double value() const { return sum_ + compensation_; }

    private:
        double sum_ = 0.0;
        double compensation_ = 0.0;
    };

    // Gamma(k) = (k-1)! for integer k >= 1; throws overflow for k >= 172
    double gamma_int(int k);

    // Gamma(a) for real a > 0
    double gamma_real(double a);

    // Unnormalized lower incomplete gamma(k, x) = Gamma(k) P(k, x) for integer k >= 1, x >= 0.
    double lower_incomplete_gamma(int k, double x);

    // Regularized P(k, x) = gamma(k, x) / Gamma(k), the Erlang-k CDF. Accurate in relative terms
    // for small x (uses the exponential-series tail instead of 1 - partial sum there).
    double regularized_lower_gamma(int k, double x);

    // Q(k, x) = 1 - P(k, x) = exp(-x) sum_{z<k} x^z / z!
    double regularized_upper_gamma(int k, double x);

    // Product_{i=1..n} Gamma(m - i + 1), requires m >= n >= 1
    double multi_gamma_product(int m, int n);
    double log_multi_gamma_product(int m, int n);

    // Binomial coefficient by multiplicative loop; 0 when k < 0 or k > n
    double binomial(int n, int k);

    // y^l / (1 + y)^L for y >= 0, evaluated in log space once y is large
    double power_ratio(double y, int l, int L);

    struct LogDeterminant
    {
        double log_abs; // log|det|, -inf for a singular matrix
        double sign;    // -1, 0 or +1
    };

    // LU factorization with partial pivoting
    LogDeterminant log_determinant(const SmallMatrix &m);
    double determinant(const SmallMatrix &m);
}

#endif
