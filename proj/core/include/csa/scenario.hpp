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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "csa/field.hpp"
#include "csa/kinematics.hpp"
#include "csa/stat_model.hpp"
#include "csa/trace.hpp"

namespace csa::io {

/// Configuration or schema problem: malformed config line, unknown key,
/// missing required key, out-of-range value, CSV schema mismatch. Maps to
/// CLI exit code 2.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& message) : std::runtime_error(message) {}
};

/// Filesystem problem: unreadable input, unwritable output. Maps to CLI
/// exit code 3.
class IoError : public std::runtime_error {
  public:
    explicit IoError(const std::string& message) : std::runtime_error(message) {}
};

/// One fully-specified run: a flat dotted-key config file determines a
/// scenario, and (scenario, seeds) determines every output byte.
struct Scenario {
    std::string id;                          ///< config file stem unless scenario.id is set
    double carrier_frequency_hz = 2.45e9;    ///< metadata; unit conversion for reports
    field::FieldParams field;
    kinematics::AntennaMount mount;
    double total_distance = 6.0;             ///< lambda
    double step = 0.05;                      ///< lambda
    std::vector<Mode> modes{Mode::regular, Mode::csa, Mode::stationary};
    double residual_sigma = 0.0;
    std::uint64_t noise_seed = 1;
    model::PiecewiseStaticModel model;
    std::size_t ensemble = 1;
    std::optional<double> speed;             ///< lambda per time unit

    /// Semantic validation across all sub-configs; throws ConfigError.
    void validate() const;
};

/// Parses the dotted-key config format. `source` names the input in
/// diagnostics ("file.cfg:12: ..."). Required keys: mount.aperture,
/// trajectory.total_distance, trajectory.step; everything else has the
/// defaults above. mount.initial_offset defaults to the aperture.
Scenario parse_scenario(std::string_view text, std::string_view source, std::string_view id);

/// Loads and parses a config file. Throws IoError when the file cannot be
/// read and ConfigError on parse/validation failure.
Scenario load_scenario(const std::filesystem::path& path);

/// Carrier wavelength in meters.
double wavelength_m(double carrier_frequency_hz);

}  // namespace csa::io
