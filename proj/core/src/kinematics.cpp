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

#include "csa/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace csa::kinematics {

namespace {

void validate_trajectory(const DeviceTrajectory& trajectory) {
    for (double n : trajectory.samples) {
        if (!std::isfinite(n)) {
            throw std::invalid_argument("trajectory samples must be finite");
        }
    }
}

}  // namespace

void AntennaMount::validate() const {
    if (!(aperture > 0.0) || !std::isfinite(aperture)) {
        throw std::invalid_argument("mount aperture must be > 0");
    }
    if (!(initial_offset >= 0.0) || !(initial_offset <= aperture)) {
        throw std::invalid_argument("mount initial_offset must lie in [0, aperture]");
    }
    if (!(fixed_offset >= 0.0) || !(fixed_offset <= aperture)) {
        throw std::invalid_argument("mount fixed_offset must lie in [0, aperture]");
    }
}

std::size_t ControllerLog::interval_count() const {
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

std::vector<double> ControllerLog::anchors() const {
    std::vector<double> result;
    std::int32_t last_id = -1;
    for (const LogSample& sample : samples) {
        if (sample.interval_id != last_id) {
            result.push_back(sample.absolute_pos);
            last_id = sample.interval_id;
        }
    }
    return result;
}

DeviceTrajectory linear_trajectory(double total_distance, double step) {
    if (!(step > 0.0) || !std::isfinite(step)) {
        throw std::invalid_argument("linear_trajectory: step must be > 0");
    }
    if (!(total_distance >= 0.0) || !std::isfinite(total_distance)) {
        throw std::invalid_argument("linear_trajectory: total_distance must be >= 0");
    }

    DeviceTrajectory trajectory;
    trajectory.step = step;
    const auto full_steps =
        static_cast<std::size_t>(std::floor(total_distance / step + kPositionTolerance));
    trajectory.samples.reserve(full_steps + 2);
    for (std::size_t k = 0; k <= full_steps; ++k) {
        trajectory.samples.push_back(static_cast<double>(k) * step);
    }
    // Land the final sample exactly on total_distance; a trailing partial
    // step gets a clamped extra sample.
    if (std::abs(trajectory.samples.back() - total_distance) <= kPositionTolerance) {
        trajectory.samples.back() = total_distance;
    } else {
        trajectory.samples.push_back(total_distance);
    }
    return trajectory;
}

ControllerLog counter_movement(const DeviceTrajectory& trajectory, const AntennaMount& mount) {
    mount.validate();
    validate_trajectory(trajectory);

    ControllerLog log;
    log.samples.reserve(trajectory.samples.size());
    if (trajectory.samples.empty()) {
        return log;
    }

    const double aperture = mount.aperture;
    double anchor = trajectory.samples.front() + mount.initial_offset;
    std::int32_t interval = 0;

    for (double n : trajectory.samples) {
        bool repositioned = false;
        if (n > anchor + kPositionTolerance) {
            // Forward limit reached: re-anchor at the far aperture end. The
            // jump happens as the device passes the old anchor, so the new
            // anchor sits one aperture length ahead of it.
            double next = anchor + aperture;
            if (next < n - kPositionTolerance) {
                next = n + aperture;  // single step crossed more than one aperture
            }
            anchor = next;
            ++interval;
            repositioned = true;
        } else if (n < anchor - aperture - kPositionTolerance) {
            // Backward limit: re-anchor at the near end (r = 0).
            double next = anchor - aperture;
            if (next > n + aperture + kPositionTolerance) {
                next = n;
            }
            anchor = next;
            ++interval;
            repositioned = true;
        }
        const double offset = std::clamp(anchor - n, 0.0, aperture);
        log.samples.push_back({n, offset, anchor, interval, repositioned});
    }
    return log;
}

ControllerLog regular_positions(const DeviceTrajectory& trajectory, const AntennaMount& mount) {
    mount.validate();
    validate_trajectory(trajectory);

    ControllerLog log;
    log.samples.reserve(trajectory.samples.size());
    for (double n : trajectory.samples) {
        log.samples.push_back({n, mount.fixed_offset, n + mount.fixed_offset, 0, false});
    }
    return log;
}

ControllerLog stationary_positions(const DeviceTrajectory& trajectory, const AntennaMount& mount) {
    mount.validate();
    validate_trajectory(trajectory);

    ControllerLog log;
    log.samples.reserve(trajectory.samples.size());
    if (trajectory.samples.empty()) {
        return log;
    }
    const double held = trajectory.samples.front() + mount.initial_offset;
    for (double n : trajectory.samples) {
        log.samples.push_back({n, mount.initial_offset, held, 0, false});
    }
    return log;
}

}  // namespace csa::kinematics
