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

#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace csa {

/// Measurement mode a trace was produced under. `regular` moves the antenna
/// with the device, `csa` runs the counter-movement controller, `stationary`
/// keeps everything still, `model` marks traces drawn from the piecewise
/// static channel model instead of a synthesized field.
enum class Mode { regular, csa, stationary, model };

std::string_view to_string(Mode mode);
std::optional<Mode> mode_from_string(std::string_view name);

struct TraceSample {
    double n = 0.0;                    ///< device displacement from start (lambda)
    std::complex<double> h;            ///< complex channel gain
    std::int32_t interval_id = 0;      ///< static interval this sample belongs to
    bool repositioned = false;         ///< true on the first sample after an antenna jump

    bool operator==(const TraceSample&) const = default;
};

struct TraceMeta {
    std::string scenario_id;
    std::uint64_t field_seed = 0;
    std::uint64_t noise_seed = 0;
    double step = 0.0;                 ///< nominal sample spacing (lambda)
    std::optional<double> speed;       ///< device speed (lambda per time unit); labels t = n / speed

    bool operator==(const TraceMeta&) const = default;
};

/// Sequence of channel samples over one device trajectory; the common
/// currency between the simulator, the model generator, the analysis
/// routines and the CSV layer.
struct ChannelTrace {
    Mode mode = Mode::regular;
    std::vector<TraceSample> samples;
    TraceMeta meta;

    bool operator==(const ChannelTrace&) const = default;

    /// Number of distinct static intervals recorded in the trace.
    std::size_t interval_count() const;
};

}  // namespace csa
