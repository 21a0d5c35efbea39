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

#include "csa/trace_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "csa/analysis.hpp"
#include "csa/scenario.hpp"

namespace csa::io {

namespace {

std::string_view trim(std::string_view text) {
    const auto begin = text.find_first_not_of(" \t\r");
    if (begin == std::string_view::npos) {
        return {};
    }
    const auto end = text.find_last_not_of(" \t\r");
    return text.substr(begin, end - begin + 1);
}

[[noreturn]] void fail(std::string_view source, int line, const std::string& message) {
    std::ostringstream out;
    if (!source.empty()) {
        out << source << ":";
    }
    out << line << ": " << message;
    throw ConfigError(out.str());
}

double parse_csv_double(std::string_view value, std::string_view source, int line,
                        std::string_view column) {
    double parsed = 0.0;
    const auto result = std::from_chars(value.data(), value.data() + value.size(), parsed);
    if (result.ec != std::errc{} || result.ptr != value.data() + value.size()) {
        fail(source, line,
             "column '" + std::string(column) + "': invalid number '" + std::string(value) + "'");
    }
    return parsed;
}

/// Splits one CSV row into exactly 9 fields (no quoting in this schema).
std::array<std::string_view, 9> split_row(std::string_view row, std::string_view source,
                                          int line) {
    std::array<std::string_view, 9> fields;
    std::size_t start = 0;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        const std::size_t comma = row.find(',', start);
        const bool last = (i + 1 == fields.size());
        if (last != (comma == std::string_view::npos)) {
            fail(source, line, "expected 9 comma-separated columns");
        }
        fields[i] = last ? row.substr(start) : row.substr(start, comma - start);
        start = comma + 1;
    }
    return fields;
}

void append_metadata_line(std::string& out, std::string_view key, const std::string& value) {
    out += "# ";
    out += key;
    out += " = ";
    out += value;
    out += "\n";
}

}  // namespace

std::string format_double(double value) {
    std::array<char, 32> buffer{};
    const auto result = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
    return std::string(buffer.data(), result.ptr);
}

std::string trace_to_csv(const ChannelTrace& trace) {
    std::string out;
    out.reserve(64 * trace.samples.size() + 256);

    append_metadata_line(out, "csa-trace", "v1");
    append_metadata_line(out, "scenario",
                         trace.meta.scenario_id.empty() ? "-" : trace.meta.scenario_id);
    append_metadata_line(out, "field_seed", std::to_string(trace.meta.field_seed));
    append_metadata_line(out, "noise_seed", std::to_string(trace.meta.noise_seed));
    append_metadata_line(out, "step", format_double(trace.meta.step));
    append_metadata_line(out, "speed",
                         trace.meta.speed ? format_double(*trace.meta.speed) : "none");

    out += kCsvHeader;
    out += "\n";

    const std::string_view mode_name = to_string(trace.mode);
    for (const TraceSample& sample : trace.samples) {
        out += format_double(sample.n);
        out += ',';
        if (trace.meta.speed) {
            out += format_double(sample.n / *trace.meta.speed);
        }
        out += ',';
        out += format_double(sample.h.real());
        out += ',';
        out += format_double(sample.h.imag());
        out += ',';
        out += format_double(20.0 * std::log10(std::abs(sample.h)));
        out += ',';
        out += format_double(analysis::wrap_phase(sample.h));
        out += ',';
        out += mode_name;
        out += ',';
        out += std::to_string(sample.interval_id);
        out += ',';
        out += sample.repositioned ? '1' : '0';
        out += '\n';
    }
    return out;
}

ChannelTrace parse_trace_csv(std::string_view text, std::string_view source) {
    ChannelTrace trace;
    bool header_seen = false;
    bool mode_seen = false;
    int line_number = 0;

    std::size_t position = 0;
    while (position <= text.size()) {
        const std::size_t newline = text.find('\n', position);
        const std::string_view raw = text.substr(
            position, newline == std::string_view::npos ? newline : newline - position);
        ++line_number;
        const std::string_view line = trim(raw);

        if (line.empty()) {
            // fall through to advance
        } else if (line.front() == '#') {
            const std::string_view body = trim(line.substr(1));
            const std::size_t equals = body.find('=');
            if (equals != std::string_view::npos) {
                const std::string_view key = trim(body.substr(0, equals));
                const std::string_view value = trim(body.substr(equals + 1));
                if (key == "scenario") {
                    trace.meta.scenario_id = (value == "-") ? "" : std::string(value);
                } else if (key == "field_seed") {
                    std::uint64_t seed = 0;
                    std::from_chars(value.data(), value.data() + value.size(), seed);
                    trace.meta.field_seed = seed;
                } else if (key == "noise_seed") {
                    std::uint64_t seed = 0;
                    std::from_chars(value.data(), value.data() + value.size(), seed);
                    trace.meta.noise_seed = seed;
                } else if (key == "step") {
                    trace.meta.step = parse_csv_double(value, source, line_number, "step");
                } else if (key == "speed") {
                    if (value != "none") {
                        trace.meta.speed = parse_csv_double(value, source, line_number, "speed");
                    }
                }
                // unrecognized metadata keys are ignored
            }
        } else if (!header_seen) {
            if (line != kCsvHeader) {
                fail(source, line_number,
                     "unexpected CSV header (want '" + std::string(kCsvHeader) + "')");
            }
            header_seen = true;
        } else {
            const auto fields = split_row(line, source, line_number);
            TraceSample sample;
            sample.n = parse_csv_double(fields[0], source, line_number, "n_lambda");
            // fields[1] (t) is derived from n and the speed metadata
            sample.h = {parse_csv_double(fields[2], source, line_number, "re"),
                        parse_csv_double(fields[3], source, line_number, "im")};
            // fields[4] (mag_db) and fields[5] (phase_rad) are derived from re/im
            const auto mode = mode_from_string(fields[6]);
            if (!mode) {
                fail(source, line_number, "column 'mode': unknown mode '" + std::string(fields[6]) + "'");
            }
            if (!mode_seen) {
                trace.mode = *mode;
                mode_seen = true;
            } else if (*mode != trace.mode) {
                fail(source, line_number, "column 'mode': mixed modes in one trace");
            }
            int interval_id = 0;
            const auto id_result = std::from_chars(
                fields[7].data(), fields[7].data() + fields[7].size(), interval_id);
            if (id_result.ec != std::errc{} ||
                id_result.ptr != fields[7].data() + fields[7].size()) {
                fail(source, line_number, "column 'interval_id': invalid integer");
            }
            sample.interval_id = interval_id;
            if (fields[8] == "1") {
                sample.repositioned = true;
            } else if (fields[8] == "0") {
                sample.repositioned = false;
            } else {
                fail(source, line_number, "column 'repositioned': expected 0 or 1");
            }
            trace.samples.push_back(sample);
        }

        if (newline == std::string_view::npos) {
            break;
        }
        position = newline + 1;
    }

    if (!header_seen) {
        fail(source, line_number, "missing CSV header");
    }
    if (trace.samples.empty()) {
        fail(source, line_number, "trace has no samples");
    }
    return trace;
}

void write_trace_csv(const std::filesystem::path& path, const ChannelTrace& trace) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    out << trace_to_csv(trace);
    if (!out) {
        throw IoError("failed writing '" + path.string() + "'");
    }
}

ChannelTrace read_trace_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read trace file '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_trace_csv(buffer.str(), path.string());
}

}  // namespace csa::io
