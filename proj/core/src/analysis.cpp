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

#include "csa/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "csa/stat_model.hpp"
#include "csa/threading.hpp"

namespace csa::analysis {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double interval_fade_depth_db(const ChannelTrace& trace, std::size_t begin, std::size_t end) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
        const double magnitude = std::abs(trace.samples[i].h);
        lo = std::min(lo, magnitude);
        hi = std::max(hi, magnitude);
    }
    if (lo == 0.0) {
        return hi == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
    return 20.0 * std::log10(hi / lo);
}

}  // namespace

FadeDepth fade_depth(const ChannelTrace& trace) {
    if (trace.samples.empty()) {
        throw std::invalid_argument("fade_depth: empty trace");
    }
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (const TraceSample& sample : trace.samples) {
        const double magnitude = std::abs(sample.h);
        lo = std::min(lo, magnitude);
        hi = std::max(hi, magnitude);
    }
    if (lo == 0.0) {
        return {std::numeric_limits<double>::infinity(), true};
    }
    return {20.0 * std::log10(hi / lo), false};
}

double wrap_phase(std::complex<double> h) {
    if (h.real() == 0.0 && h.imag() == 0.0) {
        return 0.0;
    }
    double phase = std::atan2(h.imag(), h.real());
    if (phase < 0.0) {
        phase += kTwoPi;
    }
    // A tiny negative angle can round up to exactly 2*pi.
    if (phase >= kTwoPi) {
        phase = 0.0;
    }
    if (phase == 0.0) {
        phase = 0.0;  // normalize -0.0
    }
    return phase;
}

PhaseResult wrap_phase(const ChannelTrace& trace) {
    PhaseResult result;
    result.phase.reserve(trace.samples.size());
    for (const TraceSample& sample : trace.samples) {
        if (sample.h.real() == 0.0 && sample.h.imag() == 0.0) {
            ++result.zero_samples;
        }
        result.phase.push_back(wrap_phase(sample.h));
    }
    return result;
}

std::vector<std::size_t> segment_static(const ChannelTrace& trace, double epsilon) {
    if (trace.samples.empty()) {
        throw std::invalid_argument("segment_static: empty trace");
    }
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
        throw std::invalid_argument("segment_static: epsilon must be > 0");
    }

    std::vector<std::size_t> boundaries{0};
    std::complex<double> sum = trace.samples.front().h;
    std::size_t count = 1;
    for (std::size_t i = 1; i < trace.samples.size(); ++i) {
        const std::complex<double> mean = sum / static_cast<double>(count);
        if (std::abs(trace.samples[i].h - mean) > epsilon) {
            boundaries.push_back(i);
            sum = trace.samples[i].h;
            count = 1;
        } else {
            sum += trace.samples[i].h;
            ++count;
        }
    }
    return boundaries;
}

RiceEstimate estimate_rice_k(std::span<const double> magnitudes) {
    if (magnitudes.size() < 2) {
        throw std::invalid_argument("estimate_rice_k: need at least 2 samples");
    }

    double m2 = 0.0;
    double m4 = 0.0;
    double lo = magnitudes.front();
    double hi = magnitudes.front();
    for (double r : magnitudes) {
        if (!(r >= 0.0) || !std::isfinite(r)) {
            throw std::invalid_argument("estimate_rice_k: magnitudes must be finite and >= 0");
        }
        const double r2 = r * r;
        m2 += r2;
        m4 += r2 * r2;
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    const auto count = static_cast<double>(magnitudes.size());
    m2 /= count;
    m4 /= count;

    if (lo == hi) {
        // Zero scatter: the diffuse power estimate vanishes.
        return {std::numeric_limits<double>::infinity(), m2};
    }
    const double gamma_sq = 2.0 * m2 * m2 - m4;
    if (gamma_sq <= 0.0) {
        return {0.0, m2};
    }
    const double gamma = std::sqrt(gamma_sq);
    const double diffuse = m2 - gamma;
    if (diffuse <= 0.0) {
        return {std::numeric_limits<double>::infinity(), m2};
    }
    return {gamma / diffuse, m2};
}

std::vector<AutocorrSample> spatial_autocorr(const field::FieldParams& params,
                                             std::span<const double> lags,
                                             std::size_t num_seeds,
                                             const AutocorrOptions& options) {
    if (num_seeds < 1) {
        throw std::invalid_argument("spatial_autocorr: num_seeds must be >= 1");
    }
    if (options.reference_points < 1 || !(options.reference_spacing > 0.0)) {
        throw std::invalid_argument("spatial_autocorr: invalid reference grid");
    }

    const std::size_t lag_count = lags.size();

    struct Partial {
        std::vector<std::complex<double>> cross;
        std::vector<double> power_ref;
        std::vector<double> power_shifted;
    };
    std::vector<Partial> partials(num_seeds);

    auto run_seed = [&](std::size_t seed_index) {
        field::FieldParams seed_params = params;
        seed_params.seed = params.seed + seed_index;
        const field::FieldModel model = field::synthesize_field(seed_params);

        Partial& partial = partials[seed_index];
        partial.cross.assign(lag_count, {});
        partial.power_ref.assign(lag_count, 0.0);
        partial.power_shifted.assign(lag_count, 0.0);

        for (std::size_t r = 0; r < options.reference_points; ++r) {
            const double x = static_cast<double>(r) * options.reference_spacing;
            const std::complex<double> h_ref = field::eval_channel(model, x);
            for (std::size_t l = 0; l < lag_count; ++l) {
                const std::complex<double> h_shifted = field::eval_channel(model, x + lags[l]);
                partial.cross[l] += h_ref * std::conj(h_shifted);
                partial.power_ref[l] += std::norm(h_ref);
                partial.power_shifted[l] += std::norm(h_shifted);
            }
        }
    };

    const std::size_t workers = thread_cap(num_seeds);
    if (workers <= 1) {
        for (std::size_t s = 0; s < num_seeds; ++s) {
            run_seed(s);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t s = next.fetch_add(1); s < num_seeds; s = next.fetch_add(1)) {
                    run_seed(s);
                }
            });
        }
        for (std::thread& thread : pool) {
            thread.join();
        }
    }

    // Reduce in seed order; the result is independent of the thread count.
    std::vector<AutocorrSample> result(lag_count);
    for (std::size_t l = 0; l < lag_count; ++l) {
        std::complex<double> cross;
        double power_ref = 0.0;
        double power_shifted = 0.0;
        for (std::size_t s = 0; s < num_seeds; ++s) {
            cross += partials[s].cross[l];
            power_ref += partials[s].power_ref[l];
            power_shifted += partials[s].power_shifted[l];
        }
        result[l].lag = lags[l];
        if (lags[l] == 0.0) {
            result[l].correlation = {1.0, 0.0};  // zero lag is 1 by definition
        } else {
            result[l].correlation = cross / std::sqrt(power_ref * power_shifted);
        }
    }
    return result;
}

std::vector<IntervalStat> interval_stats(const ChannelTrace& trace,
                                         const std::vector<std::size_t>& boundaries) {
    if (trace.samples.empty()) {
        throw std::invalid_argument("interval_stats: empty trace");
    }
    if (boundaries.empty() || boundaries.front() != 0) {
        throw std::invalid_argument("interval_stats: boundaries must start at sample 0");
    }

    std::vector<IntervalStat> stats;
    stats.reserve(boundaries.size());
    for (std::size_t k = 0; k < boundaries.size(); ++k) {
        const std::size_t begin = boundaries[k];
        const std::size_t end =
            (k + 1 < boundaries.size()) ? boundaries[k + 1] : trace.samples.size();
        if (begin >= end || end > trace.samples.size()) {
            throw std::invalid_argument("interval_stats: boundaries out of range");
        }

        IntervalStat stat;
        stat.begin = begin;
        stat.end = end;
        stat.start_n = trace.samples[begin].n;
        stat.end_n = trace.samples[end - 1].n;

        // Bit-constant intervals report their held value and zero variance
        // exactly, without accumulation dust.
        bool constant = true;
        std::complex<double> sum;
        for (std::size_t i = begin; i < end; ++i) {
            sum += trace.samples[i].h;
            constant = constant && trace.samples[i].h == trace.samples[begin].h;
        }
        stat.mean = constant ? trace.samples[begin].h : sum / static_cast<double>(end - begin);

        if (!constant && end - begin > 1) {
            double ss = 0.0;
            for (std::size_t i = begin; i < end; ++i) {
                ss += std::norm(trace.samples[i].h - stat.mean);
            }
            stat.variance = ss / static_cast<double>(end - begin - 1);
        }
        stats.push_back(stat);
    }
    return stats;
}

std::vector<ModeSummary> compare_modes(std::span<const ChannelTrace> traces) {
    if (traces.empty()) {
        throw std::invalid_argument("compare_modes: no traces");
    }
    const ChannelTrace& reference = traces.front();
    for (const ChannelTrace& trace : traces) {
        if (trace.samples.size() != reference.samples.size()) {
            throw std::invalid_argument("compare_modes: traces do not share a trajectory grid");
        }
        for (std::size_t i = 0; i < trace.samples.size(); ++i) {
            if (trace.samples[i].n != reference.samples[i].n) {
                throw std::invalid_argument(
                    "compare_modes: traces do not share a trajectory grid");
            }
        }
    }

    std::vector<ModeSummary> summaries;
    summaries.reserve(traces.size());
    for (const ChannelTrace& trace : traces) {
        ModeSummary summary;
        summary.mode = trace.mode;
        summary.samples = trace.samples.size();
        summary.fade = fade_depth(trace);

        for (std::size_t i = 1; i < trace.samples.size(); ++i) {
            summary.total_variation +=
                std::abs(std::abs(trace.samples[i].h) - std::abs(trace.samples[i - 1].h));
        }

        // Interval structure from the trace's own interval ids.
        std::vector<std::size_t> boundaries{0};
        for (std::size_t i = 1; i < trace.samples.size(); ++i) {
            if (trace.samples[i].interval_id != trace.samples[i - 1].interval_id) {
                boundaries.push_back(i);
            }
        }
        summary.intervals = boundaries.size();

        const std::vector<IntervalStat> stats = interval_stats(trace, boundaries);
        double variance_sum = 0.0;
        double worst_fade = 0.0;
        for (const IntervalStat& stat : stats) {
            variance_sum += stat.variance;
            worst_fade = std::max(worst_fade, interval_fade_depth_db(trace, stat.begin, stat.end));
        }
        summary.mean_within_interval_variance = variance_sum / static_cast<double>(stats.size());
        summary.within_interval_fade_depth_db = worst_fade;

        summaries.push_back(summary);
    }
    return summaries;
}

AnalysisReport analyze_trace(const ChannelTrace& trace, double segmentation_epsilon) {
    AnalysisReport report;
    report.fade = fade_depth(trace);
    report.zero_phase_samples = wrap_phase(trace).zero_samples;
    report.segmentation_epsilon = segmentation_epsilon;

    for (std::size_t i = 1; i < trace.samples.size(); ++i) {
        report.total_variation +=
            std::abs(std::abs(trace.samples[i].h) - std::abs(trace.samples[i - 1].h));
    }

    const std::vector<std::size_t> boundaries = segment_static(trace, segmentation_epsilon);
    report.intervals = interval_stats(trace, boundaries);

    double variance_sum = 0.0;
    for (const IntervalStat& stat : report.intervals) {
        variance_sum += stat.variance;
    }
    report.mean_within_interval_variance =
        variance_sum / static_cast<double>(report.intervals.size());

    const model::ModelFit fit = model::fit_model(trace, boundaries);
    report.k_hat = fit.k_hat;
    report.omega_hat = fit.omega_hat;
    report.sigma_hat = fit.sigma_hat;
    return report;
}

}  // namespace csa::analysis
