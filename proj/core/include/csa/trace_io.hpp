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

#include <filesystem>
#include <string>
#include <string_view>

#include "csa/trace.hpp"

namespace csa::io {

/// Column layout of the trace CSV. `t` is empty when no device speed is
/// configured; re/im are authoritative, mag_db and phase_rad (wrapped to
/// [0, 2*pi)) are included for direct plotting.
inline constexpr std::string_view kCsvHeader =
    "n_lambda,t,re,im,mag_db,phase_rad,mode,interval_id,repositioned";

/// Shortest representation that round-trips the exact double value.
std::string format_double(double value);

/// Serializes a trace: `# key = value` metadata lines, the fixed header,
/// one row per sample. Output bytes are a pure function of the trace.
std::string trace_to_csv(const ChannelTrace& trace);

/// Parses the format written by trace_to_csv. Throws ConfigError on schema
/// mismatch; `source` names the input in diagnostics.
ChannelTrace parse_trace_csv(std::string_view text, std::string_view source);

/// File wrappers; throw IoError on filesystem failure.
void write_trace_csv(const std::filesystem::path& path, const ChannelTrace& trace);
ChannelTrace read_trace_csv(const std::filesystem::path& path);

}  // namespace csa::io
