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
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "csa/field.hpp"
#include "csa/trace.hpp"

namespace csa::analysis {

struct FadeDepth {
    double db = 0.0;        ///< 20*log10(max|h| / min|h|); +inf when flagged
    bool infinite = false;  ///< some sample had |h| == 0
};

/// Fade depth over a whole trace. Throws std::invalid_argument on an empty
/// trace; zero-magnitude samples yield an infinite depth with the flag set.
FadeDepth fade_depth(const ChannelTrace& trace);

/// arg(h) mapped into [0, 2*pi). The phase of 0+0j is defined as 0.
double wrap_phase(std::complex<double> h);

struct PhaseResult {
    std::vector<double> phase;       ///< per sample, in [0, 2*pi)
    std::size_t zero_samples = 0;    ///< samples with h == 0, reported as phase 0
};
PhaseResult wrap_phase(const ChannelTrace& trace);

/// Greedy static-interval segmentation: a new interval starts when the
/// complex deviation of a sample from the running mean of the current
/// interval exceeds epsilon. Returns interval start indices; the first is
/// always 0. Operating on the complex deviation (not magnitude) also
/// catches phase-only anchor changes.
std::vector<std::size_t> segment_static(const ChannelTrace& trace, double epsilon);

struct RiceEstimate {
    double k_hat = 0.0;    ///< +inf when the sample shows no scatter at all
    double omega_hat = 0.0;
};

/// Moment-based Rice estimator from m2 = E[r^2] and m4 = E[r^4]:
/// gamma = sqrt(max(0, 2 m2^2 - m4)), K = gamma / (m2 - gamma),
/// Omega = m2. Inputs must be >= 0 with at least 2 samples.
RiceEstimate estimate_rice_k(std::span<const double> magnitudes);

struct AutocorrSample {
    double lag = 0.0;                    ///< d (lambda)
    std::complex<double> correlation;    ///< normalized E[H(x) H*(x+d)]
};

struct AutocorrOptions {
    std::size_t reference_points = 25;   ///< positions averaged per seed
    double reference_spacing = 2.0;      ///< spacing between reference positions (lambda)
};

/// Estimates the normalized spatial autocorrelation of the field over an
/// ensemble of seeds (params.seed, params.seed + 1, ...). Seeds fan out
/// over threads capped by CSA_SIM_THREADS; partial sums reduce in seed
/// order, so results do not depend on the thread count.
std::vector<AutocorrSample> spatial_autocorr(const field::FieldParams& params,
                                             std::span<const double> lags,
                                             std::size_t num_seeds,
                                             const AutocorrOptions& options = {});

struct IntervalStat {
    std::size_t begin = 0;  ///< first sample index
    std::size_t end = 0;    ///< one past the last sample index
    double start_n = 0.0;
    double end_n = 0.0;
    std::complex<double> mean;
    double variance = 0.0;  ///< within-interval sample variance of h
};

std::vector<IntervalStat> interval_stats(const ChannelTrace& trace,
                                         const std::vector<std::size_t>& boundaries);

struct ModeSummary {
    Mode mode = Mode::regular;
    std::size_t samples = 0;
    FadeDepth fade;
    double total_variation = 0.0;            ///< sum of ||h_{i+1}| - |h_i||
    std::size_t intervals = 0;               ///< distinct interval ids in the trace
    double mean_within_interval_variance = 0.0;
    double within_interval_fade_depth_db = 0.0;  ///< max fade depth inside any interval
};

/// Side-by-side summary of traces that share one trajectory grid; throws
/// std::invalid_argument when the grids differ.
std::vector<ModeSummary> compare_modes(std::span<const ChannelTrace> traces);

struct AnalysisReport {
    FadeDepth fade;
    std::size_t zero_phase_samples = 0;
    double total_variation = 0.0;
    double segmentation_epsilon = 0.0;
    std::vector<IntervalStat> intervals;
    std::optional<double> k_hat;
    std::optional<double> omega_hat;
    double sigma_hat = 0.0;
    double mean_within_interval_variance = 0.0;
    std::vector<AutocorrSample> autocorr;   ///< filled on request
    std::vector<ModeSummary> comparison;    ///< filled by the compare path
};

/// Full single-trace analysis: fade depth, segmentation at epsilon,
/// per-interval statistics and the model fit over the found intervals.
AnalysisReport analyze_trace(const ChannelTrace& trace, double segmentation_epsilon);

}  // namespace csa::analysis
