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

#include "csa/report.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "csa/scenario.hpp"
#include "csa/trace_io.hpp"

namespace csa::io {

namespace {

std::string format_optional(const std::optional<double>& value) {
    if (!value) {
        return "n/a";
    }
    if (std::isinf(*value)) {
        return "inf";
    }
    return format_double(*value);
}

void emit(std::string& out, std::string_view prefix, std::string_view key,
          const std::string& value) {
    out += prefix;
    out += key;
    out += " = ";
    out += value;
    out += "\n";
}

}  // namespace

std::string report_to_kv(const analysis::AnalysisReport& report,
                         const ChannelTrace& trace,
                         std::string_view trace_name,
                         std::string_view prefix,
                         std::optional<double> carrier_frequency_hz) {
    std::string out;
    emit(out, prefix, "trace", std::string(trace_name));
    emit(out, prefix, "mode", std::string(to_string(trace.mode)));
    emit(out, prefix, "samples", std::to_string(trace.samples.size()));
    emit(out, prefix, "step", format_double(trace.meta.step));
    emit(out, prefix, "field_seed", std::to_string(trace.meta.field_seed));
    emit(out, prefix, "noise_seed", std::to_string(trace.meta.noise_seed));
    emit(out, prefix, "fade_depth_db",
         report.fade.infinite ? "inf" : format_double(report.fade.db));
    emit(out, prefix, "fade_depth_infinite", report.fade.infinite ? "1" : "0");
    emit(out, prefix, "zero_magnitude_samples", std::to_string(report.zero_phase_samples));
    emit(out, prefix, "total_variation", format_double(report.total_variation));
    emit(out, prefix, "segmentation_epsilon", format_double(report.segmentation_epsilon));
    emit(out, prefix, "intervals", std::to_string(report.intervals.size()));
    emit(out, prefix, "k_hat", format_optional(report.k_hat));
    emit(out, prefix, "omega_hat", format_optional(report.omega_hat));
    emit(out, prefix, "sigma_hat", format_double(report.sigma_hat));
    emit(out, prefix, "mean_within_interval_variance",
         format_double(report.mean_within_interval_variance));
    if (carrier_frequency_hz) {
        emit(out, prefix, "carrier_frequency_hz", format_double(*carrier_frequency_hz));
        emit(out, prefix, "wavelength_m", format_double(wavelength_m(*carrier_frequency_hz)));
    }

    for (std::size_t k = 0; k < report.intervals.size(); ++k) {
        const analysis::IntervalStat& stat = report.intervals[k];
        const std::string base = std::string(prefix) + "interval." + std::to_string(k) + ".";
        emit(out, "", base + "start_n", format_double(stat.start_n));
        emit(out, "", base + "end_n", format_double(stat.end_n));
        emit(out, "", base + "mean_re", format_double(stat.mean.real()));
        emit(out, "", base + "mean_im", format_double(stat.mean.imag()));
        emit(out, "", base + "variance", format_double(stat.variance));
    }

    for (std::size_t k = 0; k < report.autocorr.size(); ++k) {
        const analysis::AutocorrSample& sample = report.autocorr[k];
        const std::string base = std::string(prefix) + "autocorr." + std::to_string(k) + ".";
        emit(out, "", base + "lag", format_double(sample.lag));
        emit(out, "", base + "re", format_double(sample.correlation.real()));
        emit(out, "", base + "im", format_double(sample.correlation.imag()));
    }
    return out;
}

std::string intervals_to_csv(const analysis::AnalysisReport& report) {
    std::string out = "interval_id,start_n,end_n,mean_re,mean_im,variance,count\n";
    for (std::size_t k = 0; k < report.intervals.size(); ++k) {
        const analysis::IntervalStat& stat = report.intervals[k];
        out += std::to_string(k);
        out += ',';
        out += format_double(stat.start_n);
        out += ',';
        out += format_double(stat.end_n);
        out += ',';
        out += format_double(stat.mean.real());
        out += ',';
        out += format_double(stat.mean.imag());
        out += ',';
        out += format_double(stat.variance);
        out += ',';
        out += std::to_string(stat.end - stat.begin);
        out += '\n';
    }
    return out;
}

std::string comparison_to_csv(const std::vector<analysis::ModeSummary>& summaries) {
    std::string out =
        "mode,samples,fade_depth_db,total_variation,intervals,"
        "mean_within_interval_variance,within_interval_fade_depth_db\n";
    for (const analysis::ModeSummary& summary : summaries) {
        out += to_string(summary.mode);
        out += ',';
        out += std::to_string(summary.samples);
        out += ',';
        out += summary.fade.infinite ? "inf" : format_double(summary.fade.db);
        out += ',';
        out += format_double(summary.total_variation);
        out += ',';
        out += std::to_string(summary.intervals);
        out += ',';
        out += format_double(summary.mean_within_interval_variance);
        out += ',';
        out += std::isinf(summary.within_interval_fade_depth_db)
                   ? "inf"
                   : format_double(summary.within_interval_fade_depth_db);
        out += '\n';
    }
    return out;
}

std::string summary_line(const analysis::AnalysisReport& report,
                         const ChannelTrace& trace,
                         std::string_view trace_name) {
    std::ostringstream out;
    out << trace_name << ": mode=" << to_string(trace.mode)
        << " samples=" << trace.samples.size();
    out << " fade_depth=";
    if (report.fade.infinite) {
        out << "inf";
    } else {
        out.precision(2);
        out << std::fixed << report.fade.db;
    }
    out << "dB intervals=" << report.intervals.size();
    out << " k_hat=" << format_optional(report.k_hat);
    out << " sigma_hat=" << format_double(report.sigma_hat);
    return out.str();
}

}  // namespace csa::io
