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

#include "csa/field.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "csa/rng.hpp"

namespace csa::field {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double large_scale(const FieldParams& params, double x) {
    double gain = params.large_scale_gain;
    if (params.range_profile == RangeProfile::inverse_distance) {
        gain *= params.link_distance / (params.link_distance - x);
    }
    return gain;
}

}  // namespace

void FieldParams::validate() const {
    if (std::isnan(k_factor) || k_factor < 0.0) {
        throw std::invalid_argument("field k_factor must be >= 0 (or infinite)");
    }
    if (num_paths < 1) {
        throw std::invalid_argument("field num_paths must be >= 1");
    }
    if (!(large_scale_gain > 0.0) || !std::isfinite(large_scale_gain)) {
        throw std::invalid_argument("field large_scale_gain must be > 0");
    }
    if (!std::isfinite(los_angle) || !std::isfinite(los_phase)) {
        throw std::invalid_argument("field los_angle and los_phase must be finite");
    }
    if (range_profile == RangeProfile::inverse_distance && !(link_distance > 0.0)) {
        throw std::invalid_argument("field link_distance must be > 0 for the inverse_distance profile");
    }
}

FieldModel synthesize_field(const FieldParams& params) {
    params.validate();

    FieldModel model{params, {}};
    model.paths.reserve(params.num_paths);
    Rng rng(params.seed);
    const double amplitude = 1.0 / std::sqrt(static_cast<double>(params.num_paths));
    for (std::size_t m = 0; m < params.num_paths; ++m) {
        const double arrival = rng.angle();
        const double phase = rng.angle();
        model.paths.push_back({amplitude, arrival, phase});
    }
    return model;
}

std::complex<double> eval_channel(const FieldModel& field, double x) {
    const FieldParams& params = field.params;
    const auto los = std::polar(1.0, kTwoPi * x * std::cos(params.los_angle) + params.los_phase);

    std::complex<double> h;
    if (std::isinf(params.k_factor)) {
        h = los;
    } else {
        std::complex<double> diffuse;
        for (const PlanePath& path : field.paths) {
            diffuse += path.amplitude *
                       std::polar(1.0, kTwoPi * x * std::cos(path.arrival_angle) + path.phase);
        }
        const double los_weight = std::sqrt(params.k_factor / (params.k_factor + 1.0));
        const double diffuse_weight = std::sqrt(1.0 / (params.k_factor + 1.0));
        h = los_weight * los + diffuse_weight * diffuse;
    }
    return large_scale(params, x) * h;
}

}  // namespace csa::field
