// csa-sim: simulation and analysis toolkit for channel static antennas
// Copyright (C) 2026 The csa-sim authors
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

#include "csa/threading.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <thread>

namespace csa {

std::size_t thread_cap(std::size_t task_count) {
    if (task_count <= 1) {
        return 1;
    }
    std::size_t cap = std::thread::hardware_concurrency();
    if (cap == 0) {
        cap = 1;
    }
    if (const char* env = std::getenv("CSA_SIM_THREADS")) {
        unsigned long long requested = 0;
        const auto result = std::from_chars(env, env + std::strlen(env), requested);
        if (result.ec == std::errc{} && *result.ptr == '\0' && requested >= 1) {
            cap = static_cast<std::size_t>(requested);
        }
    }
    return cap < task_count ? cap : task_count;
}

}  // namespace csa
