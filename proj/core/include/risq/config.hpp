// SPDX-License-Identifier: Apache-2.0
//
// Copyright (C) 2026 The risq Authors
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

#ifndef RISQ_CONFIG_HPP
#define RISQ_CONFIG_HPP

#include "risq/geometry.hpp"
#include "risq/propagation.hpp"
#include "risq/system.hpp"

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

namespace risq
{
    enum class OutputFormat
    {
        csv,
        json,
    };

    enum class PathLossKind
    {
        uma,
        powerlaw,
    };

    // Raised for unknown keys, missing required keys and out-of-range values; the message names the key.
    class ConfigError : public InvalidArgument
    {
    public:
        ConfigError(std::string key, const std::string &what)
            : InvalidArgument(key + ": " + what), key_(std::move(key)) {}
        const std::string &key() const { return key_; }

    private:
        std::string key_;
    };

    // Run configuration in boundary units (dBm, GHz, meters, degrees). Defaults are the reference
    // urban-macro layout; [system] rician_kappa, [geometry] rows and [geometry] cols are required.
    struct RunConfig
    {
        // [system]
        double transmit_power_dbm = 20.0;
        double noise_power_dbm = -96.0;
        double carrier_freq_ghz = 5.9;
        double reflection_amplitude = 1.0;
        double rician_kappa = 4.0; // "inf" for pure LoS

        // [geometry]
        std::size_t rows = 1;
        std::size_t cols = 1;
        double bs_ris_distance_m = 95.0;
        double ris_user_distance_m = 65.0;
        double bs_height_m = 25.0;
        double ris_height_m = 10.0;
        double user_height_m = 1.5;
        bool distances_are_3d = false;
        double ris_rotation_deg = 0.0;
        double user_bearing_deg = -45.0;
        double spacing_h_m = 0.03;
        double spacing_v_m = 0.03;
        double farfield_ratio = kDefaultFarFieldRatio;

        // [pathloss]
        PathLossKind model = PathLossKind::uma;
        double antenna_gain_dbi = 0.0;
        CascadeGain cascade_gain = CascadeGain::none;
        double exponent = 2.0;
        double nlos_exponent = 2.0;

        // [run]
        std::uint64_t seed = 1;
        std::size_t trials = 3000;
        unsigned threads = 0;
        OutputFormat format = OutputFormat::csv;
        std::string output; // empty = standard output
        double threshold = 0.9;
        int bits = 2;
        double phase_offset_rad = 0.0;
        std::vector<double> n_values{2, 4, 8, 16, 32, 64, 128, 256, 512};
        std::vector<double> kappa_values{0.0, 4.0, std::numeric_limits<double>::infinity()};
        std::vector<int> bit_values{1, 2, 3, 4, 5, 6};
        std::vector<double> degradation_n_values{3, 300, 3e70};
        double simulation_element_limit = 1e6; // panels with more elements are evaluated analytically only
        double placement_total_m = 160.0;
        std::vector<double> placement_d0_values{10, 20, 30, 40, 50, 60, 70, 80, 90, 100, 110, 120, 130, 140, 150};
        std::vector<double> placement_n_values{10, 100};
        std::vector<int> placement_bit_values{2};

        friend bool operator==(const RunConfig &, const RunConfig &) = default;
    };

    RunConfig parse_config(std::string_view text);
    RunConfig load_config(const std::string &path);

    // Canonical text form; parse_config(serialize_config(c)) == c
    std::string serialize_config(const RunConfig &config);

    // Throws ConfigError on the first violated constraint
    void validate(const RunConfig &config);

    // Conversions to domain types; dB values become linear here and nowhere else.
    SystemParams system_params(const RunConfig &config);
    PathLossModel path_loss_model(const RunConfig &config);
    LayoutSpec layout_spec(const RunConfig &config);

    std::string_view to_string(OutputFormat format);
    std::string_view to_string(PathLossKind kind);
    std::string_view to_string(CascadeGain gain);

} // namespace risq

#endif
