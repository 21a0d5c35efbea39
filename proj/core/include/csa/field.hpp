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

namespace csa::field {

/// Optional large-scale amplitude trend along the motion axis.
enum class RangeProfile {
    none,              ///< flat; E[|H|^2] = gain^2 everywhere
    inverse_distance,  ///< link shortens as x grows: gain * d0 / (d0 - x)
};

/// Parameters of the frozen multipath field.
///
/// k_factor is the Rice K as a linear power ratio; k_factor = infinity
/// degenerates the field to the pure line-of-sight term.
struct FieldParams {
    double k_factor = 0.0;
    std::size_t num_paths = 256;      ///< M, diffuse plane-wave count, >= 1
    double los_angle = 0.0;           ///< theta_0 (rad)
    double los_phase = 0.0;           ///< phi_0 (rad)
    double large_scale_gain = 1.0;    ///< g, linear amplitude scale, > 0
    std::uint64_t seed = 1;
    RangeProfile range_profile = RangeProfile::none;
    double link_distance = 0.0;       ///< d0 (lambda), required > 0 for inverse_distance

    void validate() const;
};

struct PlanePath {
    double amplitude = 0.0;
    double arrival_angle = 0.0;  ///< theta_m, [0, 2*pi)
    double phase = 0.0;          ///< phi_m, [0, 2*pi)
};

/// Frozen superposition of equal-amplitude plane waves (isotropic 2-D
/// scattering) plus a fixed line-of-sight term weighted by K. Immutable
/// after synthesis; identical (params, seed) give bit-identical paths.
struct FieldModel {
    FieldParams params;
    std::vector<PlanePath> paths;
};

/// Draws the path table from a deterministic generator seeded by
/// params.seed: per path, arrival angle then phase, i.i.d. uniform on
/// [0, 2*pi); amplitudes are 1/sqrt(M).
FieldModel synthesize_field(const FieldParams& params);

/// Complex channel gain at absolute position x (lambda):
///
///   H(x) = g(x) * [ sqrt(K/(K+1)) * e^{j(2 pi x cos theta_0 + phi_0)}
///                 + sqrt(1/(K+1)) * sum_m a_m e^{j(2 pi x cos theta_m + phi_m)} ]
///
/// Pure and deterministic given the field; safe for concurrent calls.
std::complex<double> eval_channel(const FieldModel& field, double x);

}  // namespace csa::field
