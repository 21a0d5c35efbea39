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

#include <cstdint>
#include <vector>

namespace csa::kinematics {

/// All positions are expressed in carrier wavelengths (lambda).
///
/// Comparisons against interval anchors carry a fixed slack of
/// kPositionTolerance to absorb floating-point dust from grid generation.
/// A sample that lands exactly on the aperture limit is still served from
/// the old anchor; repositioning happens on the first sample beyond it.
inline constexpr double kPositionTolerance = 1e-9;

/// Device displacement samples n along a 1-D motion axis.
struct DeviceTrajectory {
    std::vector<double> samples;  ///< strictly increasing for linear motion, first = 0
    double step = 0.0;            ///< nominal spacing (lambda)
};

/// Mechanical travel available to the antenna on its device.
struct AntennaMount {
    double aperture = 0.5;        ///< maximum counter-movement travel L (lambda), > 0
    double initial_offset = 0.5;  ///< starting relative position r0, in [0, aperture]
    double fixed_offset = 0.0;    ///< relative position used in regular mode, in [0, aperture]

    /// Throws std::invalid_argument on out-of-range fields.
    void validate() const;
};

struct LogSample {
    double device_pos = 0.0;       ///< n (lambda)
    double relative_offset = 0.0;  ///< r, in [0, aperture]
    double absolute_pos = 0.0;     ///< position an outside observer sees
    std::int32_t interval_id = 0;
    bool repositioned = false;     ///< first sample served from a new anchor
};

/// Per-sample record of the antenna position controller. Within one
/// interval_id the absolute position is held bit-constant; it jumps only at
/// repositioning events, where interval_id increments by exactly one.
struct ControllerLog {
    std::vector<LogSample> samples;

    std::size_t interval_count() const;
    /// Absolute position held during each interval, indexed by interval_id.
    std::vector<double> anchors() const;
};

/// Uniform forward motion: samples 0, step, 2*step, ... total_distance.
/// The final sample is clamped to total_distance when the travel is not an
/// exact multiple of the step.
DeviceTrajectory linear_trajectory(double total_distance, double step);

/// Counter-movement controller. The antenna cancels device motion to hold
/// the current interval anchor. When the device has moved a full aperture
/// length past the anchor the antenna re-anchors at the far aperture end,
/// which advances the anchor by one aperture length (mirrored for backward
/// motion, where it snaps to the near end). The jump itself happens between
/// samples; the first sample served from the new anchor carries the
/// repositioned flag. Steps larger than the aperture re-anchor directly at
/// maximum reach.
ControllerLog counter_movement(const DeviceTrajectory& trajectory, const AntennaMount& mount);

/// Antenna fixed to the device at fixed_offset; absolute position follows
/// the device. Single interval, no repositioning.
ControllerLog regular_positions(const DeviceTrajectory& trajectory, const AntennaMount& mount);

/// Nothing moves: absolute position stays at initial_offset for every
/// sample. The device index is retained only to align with the other modes'
/// sample grid.
ControllerLog stationary_positions(const DeviceTrajectory& trajectory, const AntennaMount& mount);

}  // namespace csa::kinematics
