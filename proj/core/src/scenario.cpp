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

#include "csa/scenario.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <string>

namespace csa::io {

namespace {

constexpr double kSpeedOfLight = 299792458.0;  // m/s

std::string_view trim(std::string_view text) {
    const auto begin = text.find_first_not_of(" \t\r");
    if (begin == std::string_view::npos) {
        return {};
    }
    const auto end = text.find_last_not_of(" \t\r");
    return text.substr(begin, end - begin + 1);
}

struct Diagnostics {
    std::string_view source;
    int line = 0;

    [[noreturn]] void fail(const std::string& message) const {
        std::ostringstream out;
        if (!source.empty()) {
            out << source << ":";
        }
        if (line > 0) {
            out << line << ": ";
        } else if (!source.empty()) {
            out << " ";
        }
        out << message;
        throw ConfigError(out.str());
    }
};

double parse_double(std::string_view value, std::string_view key, const Diagnostics& diag) {
    if (value == "inf" || value == "infinite") {
        return std::numeric_limits<double>::infinity();
    }
    double parsed = 0.0;
    const auto result = std::from_chars(value.data(), value.data() + value.size(), parsed);
    if (result.ec != std::errc{} || result.ptr != value.data() + value.size()) {
        diag.fail("key '" + std::string(key) + "': invalid number '" + std::string(value) + "'");
    }
    return parsed;
}

std::uint64_t parse_u64(std::string_view value, std::string_view key, const Diagnostics& diag) {
    std::uint64_t parsed = 0;
    const auto result = std::from_chars(value.data(), value.data() + value.size(), parsed);
    if (result.ec != std::errc{} || result.ptr != value.data() + value.size()) {
        diag.fail("key '" + std::string(key) + "': invalid unsigned integer '" +
                  std::string(value) + "'");
    }
    return parsed;
}

std::vector<Mode> parse_modes(std::string_view value, const Diagnostics& diag) {
    std::vector<Mode> modes;
    std::size_t start = 0;
    while (start <= value.size()) {
        const std::size_t comma = value.find(',', start);
        const std::string_view token =
            trim(value.substr(start, comma == std::string_view::npos ? comma : comma - start));
        if (!token.empty()) {
            const auto mode = mode_from_string(token);
            if (!mode) {
                diag.fail("key 'modes': unknown mode '" + std::string(token) + "'");
            }
            modes.push_back(*mode);
        }
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    if (modes.empty()) {
        diag.fail("key 'modes': at least one mode required");
    }
    return modes;
}

}  // namespace

void Scenario::validate() const {
    try {
        mount.validate();
        field.validate();
        model.validate();
    } catch (const std::invalid_argument& error) {
        throw ConfigError(error.what());
    }
    if (!(step > 0.0) || !std::isfinite(step)) {
        throw ConfigError("trajectory.step must be > 0");
    }
    if (!(total_distance >= 0.0) || !std::isfinite(total_distance)) {
        throw ConfigError("trajectory.total_distance must be >= 0");
    }
    if (!(residual_sigma >= 0.0) || !std::isfinite(residual_sigma)) {
        throw ConfigError("noise.residual_sigma must be >= 0");
    }
    if (!(carrier_frequency_hz > 0.0)) {
        throw ConfigError("carrier_frequency_hz must be > 0");
    }
    if (ensemble < 1) {
        throw ConfigError("ensemble must be >= 1");
    }
    if (speed && !(*speed > 0.0)) {
        throw ConfigError("speed must be > 0 when set");
    }
    if (modes.empty()) {
        throw ConfigError("modes must not be empty");
    }
    if (field.range_profile == field::RangeProfile::inverse_distance &&
        field.link_distance <= total_distance + mount.aperture) {
        throw ConfigError(
            "field.link_distance must exceed trajectory.total_distance + mount.aperture "
            "for the inverse_distance profile");
    }
}

Scenario parse_scenario(std::string_view text, std::string_view source, std::string_view id) {
    Scenario scenario;
    scenario.id = std::string(id);

    bool have_aperture = false;
    bool have_total = false;
    bool have_step = false;
    bool have_initial_offset = false;

    // Transform and constant-H0 keys are collected first and assembled once
    // the whole file is read.
    std::string transform_name = "identity";
    double transform_gain = 1.0;
    double transform_phase = 0.0;
    std::complex<double> transform_bias{0.0, 0.0};
    std::string model_initial = "rice";
    model::RiceDist model_rice;
    std::complex<double> model_constant{1.0, 0.0};
    int transform_line = 0;

    std::set<std::string, std::less<>> seen;
    Diagnostics diag{source, 0};

    std::size_t position = 0;
    while (position <= text.size()) {
        const std::size_t newline = text.find('\n', position);
        std::string_view line = text.substr(
            position, newline == std::string_view::npos ? newline : newline - position);
        ++diag.line;

        if (const auto comment = line.find('#'); comment != std::string_view::npos) {
            line = line.substr(0, comment);
        }
        line = trim(line);
        if (!line.empty()) {
            const std::size_t equals = line.find('=');
            if (equals == std::string_view::npos) {
                diag.fail("expected 'key = value'");
            }
            const std::string key{trim(line.substr(0, equals))};
            const std::string_view value = trim(line.substr(equals + 1));
            if (key.empty()) {
                diag.fail("expected 'key = value'");
            }
            if (value.empty()) {
                diag.fail("key '" + key + "': empty value");
            }
            if (!seen.insert(key).second) {
                diag.fail("duplicate key '" + key + "'");
            }

            if (key == "scenario.id") {
                scenario.id = std::string(value);
            } else if (key == "carrier_frequency_hz") {
                scenario.carrier_frequency_hz = parse_double(value, key, diag);
            } else if (key == "trajectory.total_distance") {
                scenario.total_distance = parse_double(value, key, diag);
                have_total = true;
            } else if (key == "trajectory.step") {
                scenario.step = parse_double(value, key, diag);
                have_step = true;
            } else if (key == "mount.aperture") {
                scenario.mount.aperture = parse_double(value, key, diag);
                have_aperture = true;
            } else if (key == "mount.initial_offset") {
                scenario.mount.initial_offset = parse_double(value, key, diag);
                have_initial_offset = true;
            } else if (key == "mount.fixed_offset") {
                scenario.mount.fixed_offset = parse_double(value, key, diag);
            } else if (key == "field.k_factor") {
                scenario.field.k_factor = parse_double(value, key, diag);
            } else if (key == "field.num_paths") {
                scenario.field.num_paths = static_cast<std::size_t>(parse_u64(value, key, diag));
            } else if (key == "field.los_angle") {
                scenario.field.los_angle = parse_double(value, key, diag);
            } else if (key == "field.los_phase") {
                scenario.field.los_phase = parse_double(value, key, diag);
            } else if (key == "field.large_scale_gain") {
                scenario.field.large_scale_gain = parse_double(value, key, diag);
            } else if (key == "field.seed") {
                scenario.field.seed = parse_u64(value, key, diag);
            } else if (key == "field.range_profile") {
                if (value == "none") {
                    scenario.field.range_profile = field::RangeProfile::none;
                } else if (value == "inverse_distance") {
                    scenario.field.range_profile = field::RangeProfile::inverse_distance;
                } else {
                    diag.fail("key 'field.range_profile': expected 'none' or 'inverse_distance'");
                }
            } else if (key == "field.link_distance") {
                scenario.field.link_distance = parse_double(value, key, diag);
            } else if (key == "noise.residual_sigma") {
                scenario.residual_sigma = parse_double(value, key, diag);
            } else if (key == "noise.seed") {
                scenario.noise_seed = parse_u64(value, key, diag);
            } else if (key == "modes") {
                scenario.modes = parse_modes(value, diag);
            } else if (key == "model.interval_length") {
                scenario.model.interval_length = parse_double(value, key, diag);
            } else if (key == "model.initial") {
                if (value != "rice" && value != "constant") {
                    diag.fail("key 'model.initial': expected 'rice' or 'constant'");
                }
                model_initial = std::string(value);
            } else if (key == "model.k_factor") {
                model_rice.k_factor = parse_double(value, key, diag);
            } else if (key == "model.omega") {
                model_rice.omega = parse_double(value, key, diag);
            } else if (key == "model.constant_re") {
                model_constant.real(parse_double(value, key, diag));
            } else if (key == "model.constant_im") {
                model_constant.imag(parse_double(value, key, diag));
            } else if (key == "model.residual_sigma") {
                scenario.model.residual_sigma = parse_double(value, key, diag);
            } else if (key == "model.seed") {
                scenario.model.seed = parse_u64(value, key, diag);
            } else if (key == "model.transform") {
                transform_name = std::string(value);
                transform_line = diag.line;
            } else if (key == "model.transform_gain") {
                transform_gain = parse_double(value, key, diag);
            } else if (key == "model.transform_phase") {
                transform_phase = parse_double(value, key, diag);
            } else if (key == "model.transform_bias_re") {
                transform_bias.real(parse_double(value, key, diag));
            } else if (key == "model.transform_bias_im") {
                transform_bias.imag(parse_double(value, key, diag));
            } else if (key == "speed") {
                scenario.speed = parse_double(value, key, diag);
            } else if (key == "ensemble") {
                scenario.ensemble = static_cast<std::size_t>(parse_u64(value, key, diag));
            } else {
                diag.fail("unknown key '" + key + "'");
            }
        }

        if (newline == std::string_view::npos) {
            break;
        }
        position = newline + 1;
    }

    diag.line = 0;
    if (!have_aperture) {
        diag.fail("missing required key 'mount.aperture'");
    }
    if (!have_total) {
        diag.fail("missing required key 'trajectory.total_distance'");
    }
    if (!have_step) {
        diag.fail("missing required key 'trajectory.step'");
    }
    if (!have_initial_offset) {
        scenario.mount.initial_offset = scenario.mount.aperture;
    }

    if (model_initial == "rice") {
        scenario.model.initial_dist = model_rice;
    } else {
        scenario.model.initial_dist = model_constant;
    }
    try {
        scenario.model.transform =
            model::make_transform(transform_name, transform_gain, transform_phase, transform_bias);
    } catch (const std::invalid_argument& error) {
        diag.line = transform_line;
        diag.fail(error.what());
    }

    try {
        scenario.validate();
    } catch (const ConfigError& error) {
        diag.fail(error.what());
    }
    return scenario;
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read config file '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario(buffer.str(), path.string(), path.stem().string());
}

double wavelength_m(double carrier_frequency_hz) {
    return kSpeedOfLight / carrier_frequency_hz;
}

}  // namespace csa::io
