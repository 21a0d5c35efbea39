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

#include "csa/experiment.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "csa/rng.hpp"

namespace csa::experiment {

ChannelTrace run_mode(const field::FieldModel& field,
                      const kinematics::DeviceTrajectory& trajectory,
                      const kinematics::AntennaMount& mount,
                      Mode mode,
                      double residual_sigma,
                      std::uint64_t noise_seed) {
    if (!(residual_sigma >= 0.0) || !std::isfinite(residual_sigma)) {
        throw std::invalid_argument("run_mode: residual_sigma must be >= 0");
    }

    kinematics::ControllerLog log;
    switch (mode) {
        case Mode::regular:
            log = kinematics::regular_positions(trajectory, mount);
            break;
        case Mode::csa:
            log = kinematics::counter_movement(trajectory, mount);
            break;
        case Mode::stationary:
            log = kinematics::stationary_positions(trajectory, mount);
            break;
        default:
            throw std::invalid_argument("run_mode: mode must be regular, csa or stationary");
    }

    ChannelTrace trace;
    trace.mode = mode;
    trace.meta.field_seed = field.params.seed;
    trace.meta.noise_seed = noise_seed;
    trace.meta.step = trajectory.step;
    trace.samples.reserve(log.samples.size());

    Rng noise(noise_seed);
    const double noise_power = residual_sigma * residual_sigma;

    // Samples within a static interval share the anchor; reusing the last
    // evaluation keeps them bit-identical by construction.
    double last_pos = std::numeric_limits<double>::quiet_NaN();
    std::complex<double> last_h;
    for (const kinematics::LogSample& sample : log.samples) {
        if (sample.absolute_pos != last_pos) {
            last_pos = sample.absolute_pos;
            last_h = field::eval_channel(field, last_pos);
        }
        std::complex<double> h = last_h;
        if (residual_sigma > 0.0) {
            h += noise.circular_normal(noise_power);
        }
        trace.samples.push_back({sample.device_pos, h, sample.interval_id, sample.repositioned});
    }
    return trace;
}

std::vector<AnchorRow> anchor_coincidence_check(const field::FieldModel& field,
                                                const ChannelTrace& csa_trace,
                                                const kinematics::AntennaMount& mount) {
    if (csa_trace.mode != Mode::csa) {
        throw std::invalid_argument("anchor_coincidence_check: trace mode must be csa");
    }
    if (csa_trace.samples.empty()) {
        throw std::invalid_argument("anchor_coincidence_check: empty trace");
    }

    kinematics::DeviceTrajectory trajectory;
    trajectory.step = csa_trace.meta.step;
    trajectory.samples.reserve(csa_trace.samples.size());
    for (const TraceSample& sample : csa_trace.samples) {
        trajectory.samples.push_back(sample.n);
    }

    const kinematics::ControllerLog log = kinematics::counter_movement(trajectory, mount);
    for (std::size_t i = 0; i < log.samples.size(); ++i) {
        if (log.samples[i].interval_id != csa_trace.samples[i].interval_id) {
            throw std::invalid_argument(
                "anchor_coincidence_check: mount does not reproduce the trace's intervals");
        }
    }

    std::vector<AnchorRow> rows;
    std::int32_t last_id = -1;
    for (std::size_t i = 0; i < log.samples.size(); ++i) {
        const auto id = log.samples[i].interval_id;
        if (id == last_id) {
            continue;
        }
        last_id = id;
        const std::complex<double> held = csa_trace.samples[i].h;
        const std::complex<double> at_anchor =
            field::eval_channel(field, log.samples[i].absolute_pos);
        rows.push_back({id, held, at_anchor, std::abs(held - at_anchor)});
    }
    return rows;
}

}  // namespace csa::experiment
