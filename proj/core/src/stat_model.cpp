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

#include "csa/stat_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "csa/analysis.hpp"
#include "csa/kinematics.hpp"
#include "csa/rng.hpp"

namespace csa::model {

namespace {

using kinematics::kPositionTolerance;

void validate_rice(const RiceDist& dist) {
    if (std::isnan(dist.k_factor) || dist.k_factor < 0.0) {
        throw std::invalid_argument("rice k_factor must be >= 0 (or infinite)");
    }
    if (!(dist.omega > 0.0) || !std::isfinite(dist.omega)) {
        throw std::invalid_argument("rice omega must be > 0");
    }
}

/// Conversion from (K, Omega): LOS amplitude a = sqrt(Omega * K / (K + 1)),
/// diffuse power 2*sigma^2 = Omega / (K + 1). The LOS phase is uniform per
/// draw, so interval anchors decorrelate in phase as well.
std::complex<double> draw_initial(Rng& rng, const InitialDist& dist) {
    if (const auto* constant = std::get_if<std::complex<double>>(&dist)) {
        return *constant;
    }
    const RiceDist& rice = std::get<RiceDist>(dist);
    if (std::isinf(rice.k_factor)) {
        return std::polar(std::sqrt(rice.omega), rng.angle());
    }
    const double los_amplitude =
        std::sqrt(rice.omega * rice.k_factor / (rice.k_factor + 1.0));
    const double los_phase = rng.angle();
    const std::complex<double> diffuse =
        rng.circular_normal(rice.omega / (rice.k_factor + 1.0));
    return std::polar(los_amplitude, los_phase) + diffuse;
}

}  // namespace

Transform make_transform(std::string_view name,
                         double gain,
                         double phase,
                         std::complex<double> bias) {
    Transform transform;
    if (name == "identity") {
        transform.kind = TransformKind::identity;
    } else if (name == "scale") {
        transform.kind = TransformKind::scale;
        transform.gain = gain;
        transform.phase = phase;
    } else if (name == "bias") {
        transform.kind = TransformKind::bias;
        transform.bias = bias;
    } else {
        throw std::invalid_argument("unknown transform '" + std::string(name) +
                                    "' (registered: identity, scale, bias)");
    }
    return transform;
}

std::complex<double> apply_transform(const Transform& transform, std::complex<double> h) {
    switch (transform.kind) {
        case TransformKind::identity:
            return h;
        case TransformKind::scale:
            return h * std::polar(transform.gain, transform.phase);
        case TransformKind::bias:
            return h + transform.bias;
    }
    throw std::invalid_argument("apply_transform: unknown transform kind");
}

void PiecewiseStaticModel::validate() const {
    if (!(interval_length > 0.0) || !std::isfinite(interval_length)) {
        throw std::invalid_argument("model interval_length must be > 0");
    }
    if (!(residual_sigma >= 0.0) || !std::isfinite(residual_sigma)) {
        throw std::invalid_argument("model residual_sigma must be >= 0");
    }
    if (const auto* rice = std::get_if<RiceDist>(&initial_dist)) {
        validate_rice(*rice);
    }
}

ChannelTrace generate_model_trace(const PiecewiseStaticModel& model,
                                  double total_distance,
                                  double step) {
    model.validate();
    const kinematics::DeviceTrajectory trajectory =
        kinematics::linear_trajectory(total_distance, step);

    const double interval_length = model.interval_length;
    const auto interval_total = std::max<std::size_t>(
        1, static_cast<std::size_t>(
               std::ceil(total_distance / interval_length - kPositionTolerance)));

    // One stream per trace: interval draws first, residuals afterwards.
    Rng rng(model.seed);
    std::vector<std::complex<double>> initial(interval_total);
    for (auto& h0 : initial) {
        h0 = draw_initial(rng, model.initial_dist);
    }

    ChannelTrace trace;
    trace.mode = Mode::model;
    trace.meta.field_seed = model.seed;
    trace.meta.noise_seed = model.seed;
    trace.meta.step = step;
    trace.samples.reserve(trajectory.samples.size());

    const double noise_power = model.residual_sigma * model.residual_sigma;
    std::int32_t last_id = -1;
    for (double n : trajectory.samples) {
        const auto id = static_cast<std::int32_t>(
            std::min(static_cast<std::size_t>(
                         std::floor((n + kPositionTolerance) / interval_length)),
                     interval_total - 1));
        std::complex<double> h = apply_transform(model.transform, initial[id]);
        if (model.residual_sigma > 0.0) {
            h += rng.circular_normal(noise_power);
        }
        const bool repositioned = last_id >= 0 && id != last_id;
        trace.samples.push_back({n, h, id, repositioned});
        last_id = id;
    }
    return trace;
}

ModelFit fit_model(const ChannelTrace& trace, const std::vector<std::size_t>& boundaries) {
    if (trace.samples.empty()) {
        throw std::invalid_argument("fit_model: empty trace");
    }
    if (boundaries.empty() || boundaries.front() != 0) {
        throw std::invalid_argument("fit_model: boundaries must start at sample 0");
    }
    for (std::size_t i = 1; i < boundaries.size(); ++i) {
        if (boundaries[i] <= boundaries[i - 1] || boundaries[i] >= trace.samples.size()) {
            throw std::invalid_argument("fit_model: boundaries must be increasing sample indices");
        }
    }

    const std::size_t interval_total = boundaries.size();
    std::vector<double> mean_magnitudes;
    mean_magnitudes.reserve(interval_total);

    double pooled_ss = 0.0;
    std::size_t pooled_dof = 0;
    for (std::size_t k = 0; k < interval_total; ++k) {
        const std::size_t begin = boundaries[k];
        const std::size_t end =
            (k + 1 < interval_total) ? boundaries[k + 1] : trace.samples.size();
        const auto count = static_cast<double>(end - begin);

        // A bit-constant interval has zero scatter; computing it through the
        // accumulated mean would leave rounding dust in sigma_hat.
        bool constant = true;
        std::complex<double> sum;
        for (std::size_t i = begin; i < end; ++i) {
            sum += trace.samples[i].h;
            constant = constant && trace.samples[i].h == trace.samples[begin].h;
        }
        const std::complex<double> mean = constant ? trace.samples[begin].h : sum / count;
        mean_magnitudes.push_back(std::abs(mean));

        if (!constant) {
            for (std::size_t i = begin; i < end; ++i) {
                pooled_ss += std::norm(trace.samples[i].h - mean);
            }
        }
        pooled_dof += (end - begin) - 1;
    }

    ModelFit fit;
    fit.intervals = interval_total;
    fit.sigma_hat = pooled_dof > 0 ? std::sqrt(pooled_ss / static_cast<double>(pooled_dof)) : 0.0;
    if (interval_total >= 2) {
        const analysis::RiceEstimate estimate = analysis::estimate_rice_k(mean_magnitudes);
        fit.k_hat = estimate.k_hat;
        fit.omega_hat = estimate.omega_hat;
    }
    return fit;
}

ModelFit fit_model(const ChannelTrace& trace, double known_interval_length) {
    if (!(known_interval_length > 0.0) || !std::isfinite(known_interval_length)) {
        throw std::invalid_argument("fit_model: interval length must be > 0");
    }
    if (trace.samples.empty()) {
        throw std::invalid_argument("fit_model: empty trace");
    }

    // Tile with the same clamp the generator applies, so a final sample that
    // lands exactly on the travel end stays in the last interval.
    const double span = trace.samples.back().n;
    const auto interval_total = std::max<long long>(
        1, static_cast<long long>(
               std::ceil(span / known_interval_length - kPositionTolerance)));

    std::vector<std::size_t> boundaries;
    long long last_id = -1;
    for (std::size_t i = 0; i < trace.samples.size(); ++i) {
        const auto id = std::min<long long>(
            static_cast<long long>(std::floor(
                (trace.samples[i].n + kPositionTolerance) / known_interval_length)),
            interval_total - 1);
        if (id != last_id) {
            boundaries.push_back(i);
            last_id = id;
        }
    }
    return fit_model(trace, boundaries);
}

}  // namespace csa::model
