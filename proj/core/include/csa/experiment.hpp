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
#include <vector>

#include "csa/field.hpp"
#include "csa/kinematics.hpp"
#include "csa/trace.hpp"

namespace csa::experiment {

/// Runs one measurement mode over a field and trajectory. Antenna positions
/// come from the matching kinematics operation; each sample is an
/// instantaneous field evaluation at the logged absolute position, plus an
/// optional circularly-symmetric complex Gaussian residual with
/// E[|nu|^2] = residual_sigma^2 drawn per sample from noise_seed.
/// residual_sigma = 0 draws nothing and is exactly noiseless.
///
/// mode must be regular, csa or stationary; model traces come from the
/// piecewise static generator instead.
ChannelTrace run_mode(const field::FieldModel& field,
                      const kinematics::DeviceTrajectory& trajectory,
                      const kinematics::AntennaMount& mount,
                      Mode mode,
                      double residual_sigma,
                      std::uint64_t noise_seed);

struct AnchorRow {
    std::int32_t interval_id = 0;
    std::complex<double> csa_value;      ///< channel held during the interval
    std::complex<double> regular_value;  ///< field evaluated at the interval anchor
    double difference = 0.0;             ///< |csa_value - regular_value|
};

/// Checks, per static interval of a noiseless csa trace, that the held
/// channel equals what a regular antenna would see at the anchor position.
/// The controller log is rebuilt from the trace grid and the mount to
/// recover the anchors; the trace must be in csa mode and its interval
/// structure must match the rebuilt log.
std::vector<AnchorRow> anchor_coincidence_check(const field::FieldModel& field,
                                                const ChannelTrace& csa_trace,
                                                const kinematics::AntennaMount& mount);

}  // namespace csa::experiment
