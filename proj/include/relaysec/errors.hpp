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

#ifndef RELAYSEC_ERRORS_HPP
#define RELAYSEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace relaysec
{
    enum class ErrorCode
    {
        violation,               // A parameter invariant does not hold
        domain,                  // Argument outside the mathematical domain of a function
        overflow,                // Result not representable in double precision
        numerical_inconsistency, // A computed probability or exponent left its valid range
        nonconverged,            // An iterative method exhausted its budget
        degenerate,              // Eigen-solver failure on a probability-zero input
        solve_failure            // Covariance matrix not positive definite
    };

    const char *to_string(ErrorCode code);

    class Error : public std::runtime_error
    {
    public:
        Error(ErrorCode code, std::string field, const std::string &message)
            : std::runtime_error(message), code_(code), field_(std::move(field)) {}

        ErrorCode code() const noexcept { return code_; }
        const std::string &field() const noexcept { return field_; } // Offending field or function name

    private:
        ErrorCode code_;
        std::string field_;
    };
}

#endif
