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

#ifndef RELAYSEC_PARALLEL_HPP
#define RELAYSEC_PARALLEL_HPP

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace relaysec
{
    // Splits [0, n) into at most `jobs` contiguous ranges and runs body(begin, end) on each.
    // jobs <= 0 uses the hardware concurrency. The first exception is rethrown after joining.
    template <typename Body>
    void parallel_for(std::int64_t n, int jobs, Body body)
    {
        if (jobs <= 0)
            jobs = int(std::max(1u, std::thread::hardware_concurrency()));
        jobs = int(std::min<std::int64_t>(jobs, std::max<std::int64_t>(n, 1)));
        if (jobs == 1)
        {
            body(std::int64_t(0), n);
            return;
        }
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(jobs);
        const std::int64_t chunk = (n + jobs - 1) / jobs;
        for (int j = 0; j < jobs; ++j)
            pool.emplace_back([&, j]
                              {
                                  try
                                  {
                                      body(std::min(n, j * chunk), std::min(n, (j + 1) * chunk));
                                  }
                                  catch (...)
                                  {
                                      errors[j] = std::current_exception();
                                  } });
        for (auto &t : pool)
            t.join();
        for (auto &e : errors)
            if (e)
                std::rethrow_exception(e);
    }
}

#endif
