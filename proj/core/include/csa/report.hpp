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

#include <optional>
#include <string>
#include <string_view>

#include "csa/analysis.hpp"
#include "csa/trace.hpp"

namespace csa::io {

/// Flat key-value serialization of an analysis report. `prefix` (e.g.
/// "trace0.") namespaces the keys when one file aggregates several traces;
/// carrier_frequency_hz, when known, adds the wavelength conversion.
std::string report_to_kv(const analysis::AnalysisReport& report,
                         const ChannelTrace& trace,
                         std::string_view trace_name,
                         std::string_view prefix = "",
                         std::optional<double> carrier_frequency_hz = std::nullopt);

/// Per-interval statistics as CSV rows.
std::string intervals_to_csv(const analysis::AnalysisReport& report);

/// Mode comparison table as CSV rows.
std::string comparison_to_csv(const std::vector<analysis::ModeSummary>& summaries);

/// One-line human-readable digest of a report, for terminal output.
std::string summary_line(const analysis::AnalysisReport& report,
                         const ChannelTrace& trace,
                         std::string_view trace_name);

}  // namespace csa::io
