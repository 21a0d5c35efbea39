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

#include "csa/trace.hpp"

namespace csa {

std::string_view to_string(Mode mode) {
    switch (mode) {
        case Mode::regular:
            return "regular";
        case Mode::csa:
            return "csa";
        case Mode::stationary:
            return "stationary";
        case Mode::model:
            return "model";
    }
    return "unknown";
}

std::optional<Mode> mode_from_string(std::string_view name) {
    if (name == "regular") return Mode::regular;
    if (name == "csa") return Mode::csa;
    if (name == "stationary") return Mode::stationary;
    if (name == "model") return Mode::model;
    return std::nullopt;
}

std::size_t ChannelTrace::interval_count() const {
    if (samples.empty()) {
        return 0;
    }
    std::size_t count = 1;
    for (std::size_t i = 1; i < samples.size(); ++i) {
        if (samples[i].interval_id != samples[i - 1].interval_id) {
            ++count;
        }
    }
    return count;
}

}  // namespace csa
