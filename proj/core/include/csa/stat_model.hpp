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
#include <string_view>
#include <variant>
#include <vector>

#include "csa/trace.hpp"

namespace csa::model {

/// Rice magnitude distribution in (K, Omega) form with Omega = E[|H0|^2].
/// Complex draws use LOS amplitude a = sqrt(Omega*K/(K+1)) with a uniform
/// phase per draw, plus a circular Gaussian with power Omega/(K+1).
struct RiceDist {
    double k_factor = 0.0;  ///< K >= 0; infinity gives constant-magnitude draws
    double omega = 1.0;     ///< mean power, > 0
};

/// Distribution of the initial channel held during a static interval:
/// either a Rice draw or a fixed complex constant.
using InitialDist = std::variant<RiceDist, std::complex<double>>;

enum class TransformKind { identity, scale, bias };

/// Modification applied to the initial channel before the residual term.
/// `scale` multiplies by gain * e^{j phase}, `bias` adds a complex constant.
struct Transform {
    TransformKind kind = TransformKind::identity;
    double gain = 1.0;
    double phase = 0.0;
    std::complex<double> bias{0.0, 0.0};
};

/// Looks a transform up by registered name ("identity", "scale", "bias").
/// Throws std::invalid_argument for unknown names.
Transform make_transform(std::string_view name,
                         double gain = 1.0,
                         double phase = 0.0,
                         std::complex<double> bias = {0.0, 0.0});

std::complex<double> apply_transform(const Transform& transform, std::complex<double> h);

/// Piecewise static channel: intervals of fixed length tile the travel, a
/// fresh initial channel H0 is drawn at each interval start, and every
/// sample is F(H0) plus an independent complex Gaussian residual with
/// E[|N|^2] = residual_sigma^2.
struct PiecewiseStaticModel {
    double interval_length = 0.5;   ///< L_int (lambda), > 0
    InitialDist initial_dist = RiceDist{};
    double residual_sigma = 0.0;    ///< sigma_N >= 0
    Transform transform;
    std::uint64_t seed = 1;

    void validate() const;
};

/// Draws a model trace over samples 0, step, ..., total_distance. One
/// generator seeded by model.seed supplies first the interval draws (in
/// interval order) and then the per-sample residuals, so a given seed fully
/// determines the trace.
ChannelTrace generate_model_trace(const PiecewiseStaticModel& model,
                                  double total_distance,
                                  double step);

struct ModelFit {
    std::optional<double> k_hat;      ///< absent with fewer than 2 intervals; may be +inf
    std::optional<double> omega_hat;  ///< absent with fewer than 2 intervals
    double sigma_hat = 0.0;           ///< residual scale, sqrt of pooled within-interval variance
    std::size_t intervals = 0;
};

/// Estimates (K, Omega, sigma_N) from a segmented trace: per-interval means
/// stand in for the H0 draws and feed the moment-based Rice estimator;
/// sigma_hat^2 is the pooled within-interval sample variance. boundaries
/// are interval start indices, first one 0.
ModelFit fit_model(const ChannelTrace& trace, const std::vector<std::size_t>& boundaries);

/// Same, with boundaries derived by tiling the travel at a known interval
/// length.
ModelFit fit_model(const ChannelTrace& trace, double known_interval_length);

}  // namespace csa::model
