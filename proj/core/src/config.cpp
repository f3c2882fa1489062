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

#include "risq/config.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace risq
{
    namespace
    {
        std::string_view trim(std::string_view s)
        {
            const auto first = s.find_first_not_of(" \t\r");
            if (first == std::string_view::npos)
                return {};
            const auto last = s.find_last_not_of(" \t\r");
            return s.substr(first, last - first + 1);
        }

        std::vector<std::string_view> split_list(std::string_view s)
        {
            std::vector<std::string_view> out;
            while (true)
            {
                const auto comma = s.find(',');
                out.push_back(trim(s.substr(0, comma)));
                if (comma == std::string_view::npos)
                    break;
                s.remove_prefix(comma + 1);
            }
            return out;
        }

        double parse_double(std::string_view v, const std::string &key)
        {
            double out = 0.0;
            const auto *end = v.data() + v.size();
            auto [ptr, ec] = std::from_chars(v.data(), end, out);
            if (ec != std::errc() || ptr != end || std::isnan(out))
                throw ConfigError(key, fmt::format("expected a number, got '{}'", v));
            return out;
        }

        template <class Int>
        Int parse_int(std::string_view v, const std::string &key)
        {
            Int out = 0;
            const auto *end = v.data() + v.size();
            auto [ptr, ec] = std::from_chars(v.data(), end, out);
            if (ec != std::errc() || ptr != end)
                throw ConfigError(key, fmt::format("expected a non-negative integer, got '{}'", v));
            return out;
        }

        bool parse_bool(std::string_view v, const std::string &key)
        {
            if (v == "true")
                return true;
            if (v == "false")
                return false;
            throw ConfigError(key, fmt::format("expected true or false, got '{}'", v));
        }

        std::string format_double(double v) { return fmt::format("{}", v); }

        template <class T>
        std::string format_list(const std::vector<T> &values)
        {
            return fmt::format("{}", fmt::join(values, ", "));
        }

        std::string format_list(const std::vector<double> &values)
        {
            std::vector<std::string> parts;
            for (double v : values)
                parts.push_back(format_double(v));
            return fmt::format("{}", fmt::join(parts, ", "));
        }

        std::vector<double> parse_double_list(std::string_view v, const std::string &key)
        {
            std::vector<double> out;
            for (auto item : split_list(v))
                out.push_back(parse_double(item, key));
            return out;
        }

        std::vector<int> parse_int_list(std::string_view v, const std::string &key)
        {
            std::vector<int> out;
            for (auto item : split_list(v))
                out.push_back(parse_int<int>(item, key));
            return out;
        }

        std::string unquote(std::string_view v)
        {
            if (v.size() >= 2 && v.front() == '"' && v.back() == '"')
                v = v.substr(1, v.size() - 2);
            return std::string(v);
        }

        struct Field
        {
            std::string_view section;
            std::string_view key;
            bool required;
            std::function<void(RunConfig &, std::string_view, const std::string &)> set;
            std::function<std::string(const RunConfig &)> get;
        };

#define RISQ_DOUBLE(sec, name, member)                                                                   \
    Field                                                                                                \
    {                                                                                                    \
        sec, name, false, [](RunConfig &c, std::string_view v, const std::string &k) { c.member = parse_double(v, k); }, \
            [](const RunConfig &c) { return format_double(c.member); }                                   \
    }

        const std::vector<Field> &fields()
        {
            static const std::vector<Field> table = {
                RISQ_DOUBLE("system", "transmit_power_dbm", transmit_power_dbm),
                RISQ_DOUBLE("system", "noise_power_dbm", noise_power_dbm),
                RISQ_DOUBLE("system", "carrier_freq_ghz", carrier_freq_ghz),
                RISQ_DOUBLE("system", "reflection_amplitude", reflection_amplitude),
                Field{"system", "rician_kappa", true,
                      [](RunConfig &c, std::string_view v, const std::string &k) { c.rician_kappa = parse_double(v, k); },
                      [](const RunConfig &c) { return format_double(c.rician_kappa); }},

                Field{"geometry", "rows", true,
                      [](RunConfig &c, std::string_view v, const std::string &k) { c.rows = parse_int<std::size_t>(v, k); },
                      [](const RunConfig &c) { return std::to_string(c.rows); }},
                Field{"geometry", "cols", true,
                      [](RunConfig &c, std::string_view v, const std::string &k) { c.cols = parse_int<std::size_t>(v, k); },
                      [](const RunConfig &c) { return std::to_string(c.cols); }},
                RISQ_DOUBLE("geometry", "bs_ris_distance_m", bs_ris_distance_m),
                RISQ_DOUBLE("geometry", "ris_user_distance_m", ris_user_distance_m),
                RISQ_DOUBLE("geometry", "bs_height_m", bs_height_m),
                RISQ_DOUBLE("geometry", "ris_height_m", ris_height_m),
                RISQ_DOUBLE("geometry", "user_height_m", user_height_m),
                Field{"geometry", "distances_are_3d", false,
                      [](RunConfig &c, std::string_view v, const std::string &k) { c.distances_are_3d = parse_bool(v, k); },
                      [](const RunConfig &c) { return std::string(c.distances_are_3d ? "true" : "false"); }},
                RISQ_DOUBLE("geometry", "ris_rotation_deg", ris_rotation_deg),
                RISQ_DOUBLE("geometry", "user_bearing_deg", user_bearing_deg),
                RISQ_DOUBLE("geometry", "spacing_h_m", spacing_h_m),
                RISQ_DOUBLE("geometry", "spacing_v_m", spacing_v_m),
                RISQ_DOUBLE("geometry", "farfield_ratio", farfield_ratio),

                Field{"pathloss", "model", false,
                      [](RunConfig &c, std::string_view v, const std::string &k)
                      {
                          if (v == "uma")
                              c.model = PathLossKind::uma;
                          else if (v == "powerlaw")
                              c.model = PathLossKind::powerlaw;
                          else
                              throw ConfigError(k, fmt::format("expected uma or powerlaw, got '{}'", v));
                      },
                      [](const RunConfig &c) { return std::string(to_string(c.model)); }},
                RISQ_DOUBLE("pathloss", "antenna_gain_dbi", antenna_gain_dbi),
                Field{"pathloss", "cascade_gain", false,
                      [](RunConfig &c, std::string_view v, const std::string &k)
                      {
                          if (v == "none")
                              c.cascade_gain = CascadeGain::none;
                          else if (v == "free_space_1m")
                              c.cascade_gain = CascadeGain::free_space_1m;
                          else
                              throw ConfigError(k, fmt::format("expected none or free_space_1m, got '{}'", v));
                      },
                      [](const RunConfig &c) { return std::string(to_string(c.cascade_gain)); }},
                RISQ_DOUBLE("pathloss", "exponent", exponent),
                RISQ_DOUBLE("pathloss", "nlos_exponent", nlos_exponent),

                Field{"run", "seed", false,
                      [](RunConfig &c, std::string_view v, const std::string &k) { c.seed = parse_int<std::uint64_t>(v, k); },
                      [](const RunConfig &c) { return std::to_string(c.seed); }},
                Field{"run", "trials", false,
                      [](RunConfig &c, std::string_view v, const std::string &k) { c.trials = parse_int<std::size_t>(v, k); },
                      [](const RunConfig &c) { return std::to_string(c.trials); }},
                Field{"run", "threads", false,
                      [](RunConfig &c, std::string_view v, const std::string &k) { c.threads = parse_int<unsigned>(v, k); },
                      [](const RunConfig &c) { return std::to_string(c.threads); }},
                Field{"run", "format", false,
                      [](RunConfig &c, std::string_view v, const std::string &k)
                      {
                          if (v == "csv")
                              c.format = OutputFormat::csv;
                          else if (v == "json")
                              c.format = OutputFormat::json;
                          else
                              throw ConfigError(k, fmt::format("expected csv or json, got '{}'", v));
                      },
                      [](const RunConfig &c) { return std::string(to_string(c.format)); }},
                Field{"run", "output", false,
                      [](RunConfig &c, std::string_view v, const std::string &) { c.output = unquote(v); },
                      [](const RunConfig &c) { return fmt::format("\"{}\"", c.output); }},
                RISQ_DOUBLE("run", "threshold", threshold),
                Field{"run", "bits", false,
                      [](RunConfig &c, std::string_view v, const std::string &k) { c.bits = parse_int<int>(v, k); },
                      [](const RunConfig &c) { return std::to_string(c.bits); }},
                RISQ_DOUBLE("run", "phase_offset_rad", phase_offset_rad),
                Field{"run", "n_values", false,
                      [](RunConfig &c, std::string_view v, const std::string &k) { c.n_values = parse_double_list(v, k); },
                      [](const RunConfig &c) { return format_list(c.n_values); }},
                Field{"run", "kappa_values", false,
                      [](RunConfig &c, std::string_view v, const std::string &k) { c.kappa_values = parse_double_list(v, k); },
                      [](const RunConfig &c) { return format_list(c.kappa_values); }},
                Field{"run", "bit_values", false,
                      [](RunConfig &c, std::string_view v, const std::string &k) { c.bit_values = parse_int_list(v, k); },
                      [](const RunConfig &c) { return format_list(c.bit_values); }},
                Field{"run", "degradation_n_values", false,
                      [](RunConfig &c, std::string_view v, const std::string &k) { c.degradation_n_values = parse_double_list(v, k); },
                      [](const RunConfig &c) { return format_list(c.degradation_n_values); }},
                RISQ_DOUBLE("run", "simulation_element_limit", simulation_element_limit),
                RISQ_DOUBLE("run", "placement_total_m", placement_total_m),
                Field{"run", "placement_d0_values", false,
                      [](RunConfig &c, std::string_view v, const std::string &k) { c.placement_d0_values = parse_double_list(v, k); },
                      [](const RunConfig &c) { return format_list(c.placement_d0_values); }},
                Field{"run", "placement_n_values", false,
                      [](RunConfig &c, std::string_view v, const std::string &k) { c.placement_n_values = parse_double_list(v, k); },
                      [](const RunConfig &c) { return format_list(c.placement_n_values); }},
                Field{"run", "placement_bit_values", false,
                      [](RunConfig &c, std::string_view v, const std::string &k) { c.placement_bit_values = parse_int_list(v, k); },
                      [](const RunConfig &c) { return format_list(c.placement_bit_values); }},
            };
            return table;
        }

#undef RISQ_DOUBLE

        std::string qualified(std::string_view section, std::string_view key)
        {
            return fmt::format("[{}] {}", section, key);
        }

        void require(bool ok, std::string_view section, std::string_view key, const std::string &constraint)
        {
            if (!ok)
                throw ConfigError(qualified(section, key), constraint);
        }

        template <class T>
        bool strictly_increasing(const std::vector<T> &v)
        {
            return std::adjacent_find(v.begin(), v.end(), std::greater_equal<T>()) == v.end();
        }

        void require_sweep(const auto &values, std::string_view key, auto lo, auto hi, const std::string &range)
        {
            require(!values.empty(), "run", key, "must list at least one value");
            require(strictly_increasing(values), "run", key, "values must be strictly increasing");
            for (auto v : values)
                require(v >= lo && v <= hi, "run", key, fmt::format("values must lie in {} (got {})", range, v));
        }
    } // namespace

    std::string_view to_string(OutputFormat format)
    {
        return format == OutputFormat::csv ? "csv" : "json";
    }

    std::string_view to_string(PathLossKind kind)
    {
        return kind == PathLossKind::uma ? "uma" : "powerlaw";
    }

    std::string_view to_string(CascadeGain gain)
    {
        return gain == CascadeGain::none ? "none" : "free_space_1m";
    }

    void validate(const RunConfig &c)
    {
        const double inf = std::numeric_limits<double>::infinity();
        require(std::isfinite(c.transmit_power_dbm), "system", "transmit_power_dbm", "must be finite");
        require(std::isfinite(c.noise_power_dbm), "system", "noise_power_dbm", "must be finite");
        require(c.carrier_freq_ghz > 0.0 && std::isfinite(c.carrier_freq_ghz), "system", "carrier_freq_ghz", "must lie in (0, inf)");
        require(c.reflection_amplitude > 0.0 && c.reflection_amplitude <= 1.0, "system", "reflection_amplitude",
                fmt::format("must lie in (0, 1] (got {})", c.reflection_amplitude));
        require(c.rician_kappa >= 0.0, "system", "rician_kappa", fmt::format("must lie in [0, inf] (got {})", c.rician_kappa));

        require(c.rows >= 1, "geometry", "rows", "must be >= 1");
        require(c.cols >= 1, "geometry", "cols", "must be >= 1");
        require(c.bs_ris_distance_m > 0.0 && std::isfinite(c.bs_ris_distance_m), "geometry", "bs_ris_distance_m", "must lie in (0, inf)");
        require(c.ris_user_distance_m > 0.0 && std::isfinite(c.ris_user_distance_m), "geometry", "ris_user_distance_m", "must lie in (0, inf)");
        require(c.bs_height_m > 0.0 && std::isfinite(c.bs_height_m), "geometry", "bs_height_m", "must lie in (0, inf)");
        require(c.ris_height_m > 0.0 && std::isfinite(c.ris_height_m), "geometry", "ris_height_m", "must lie in (0, inf)");
        require(c.user_height_m > 0.0 && std::isfinite(c.user_height_m), "geometry", "user_height_m", "must lie in (0, inf)");
        require(std::isfinite(c.ris_rotation_deg), "geometry", "ris_rotation_deg", "must be finite");
        require(std::isfinite(c.user_bearing_deg), "geometry", "user_bearing_deg", "must be finite");
        require(c.spacing_h_m > 0.0 && std::isfinite(c.spacing_h_m), "geometry", "spacing_h_m", "must lie in (0, inf)");
        require(c.spacing_v_m > 0.0 && std::isfinite(c.spacing_v_m), "geometry", "spacing_v_m", "must lie in (0, inf)");
        require(c.farfield_ratio > 0.0 && std::isfinite(c.farfield_ratio), "geometry", "farfield_ratio", "must lie in (0, inf)");

        require(std::isfinite(c.antenna_gain_dbi), "pathloss", "antenna_gain_dbi", "must be finite");
        require(c.exponent > 0.0 && std::isfinite(c.exponent), "pathloss", "exponent", "must lie in (0, inf)");
        require(c.nlos_exponent > 0.0 && std::isfinite(c.nlos_exponent), "pathloss", "nlos_exponent", "must lie in (0, inf)");

        require(c.trials >= 2, "run", "trials", fmt::format("must be >= 2 (got {})", c.trials));
        require(c.threshold > 0.0 && c.threshold <= 1.0, "run", "threshold", fmt::format("must lie in (0, 1] (got {})", c.threshold));
        require(c.bits >= 1 && c.bits <= 62, "run", "bits", fmt::format("must lie in [1, 62] (got {})", c.bits));
        require(std::isfinite(c.phase_offset_rad), "run", "phase_offset_rad", "must be finite");
        require(c.simulation_element_limit >= 1.0, "run", "simulation_element_limit", "must be >= 1");
        require_sweep(c.n_values, "n_values", 1.0, 1e150, "[1, 1e150]");
        require_sweep(c.kappa_values, "kappa_values", 0.0, inf, "[0, inf]");
        require_sweep(c.bit_values, "bit_values", 1, 16, "[1, 16]");
        require_sweep(c.degradation_n_values, "degradation_n_values", 1.0, 1e150, "[1, 1e150]");
        require(c.placement_total_m > 2.0 && std::isfinite(c.placement_total_m), "run", "placement_total_m", "must lie in (2, inf)");
        require_sweep(c.placement_d0_values, "placement_d0_values", 1.0, c.placement_total_m - 1.0,
                      fmt::format("[1, {}]", c.placement_total_m - 1.0));
        require_sweep(c.placement_n_values, "placement_n_values", 1.0, 1e150, "[1, 1e150]");
        require_sweep(c.placement_bit_values, "placement_bit_values", 1, 16, "[1, 16]");
    }

    RunConfig parse_config(std::string_view text)
    {
        RunConfig config;
        std::string section;
        std::set<std::string> seen;
        static const std::set<std::string_view> sections = {"system", "geometry", "pathloss", "run"};

        std::size_t line_no = 0;
        while (!text.empty())
        {
            const auto nl = text.find('\n');
            std::string_view line = text.substr(0, nl);
            text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
            ++line_no;

            if (const auto hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            line = trim(line);
            if (line.empty())
                continue;

            if (line.front() == '[')
            {
                if (line.back() != ']')
                    throw ConfigError(fmt::format("line {}", line_no), fmt::format("malformed section header '{}'", line));
                const auto name = trim(line.substr(1, line.size() - 2));
                if (!sections.contains(name))
                    throw ConfigError(fmt::format("[{}]", name), "unknown section");
                section = std::string(name);
                continue;
            }

            const auto eq = line.find('=');
            if (eq == std::string_view::npos)
                throw ConfigError(fmt::format("line {}", line_no), fmt::format("expected key = value, got '{}'", line));
            const auto key = trim(line.substr(0, eq));
            const auto value = trim(line.substr(eq + 1));
            if (section.empty())
                throw ConfigError(std::string(key), "key appears before any section header");

            const auto &table = fields();
            const auto it = std::find_if(table.begin(), table.end(),
                                         [&](const Field &f) { return f.section == section && f.key == key; });
            const auto name = qualified(section, key);
            if (it == table.end())
                throw ConfigError(name, "unknown key");
            if (!seen.insert(name).second)
                throw ConfigError(name, "duplicate key");
            if (value.empty())
                throw ConfigError(name, "missing value");
            it->set(config, value, name);
        }

        for (const auto &f : fields())
            if (f.required && !seen.contains(qualified(f.section, f.key)))
                throw ConfigError(qualified(f.section, f.key), "required key is missing");

        validate(config);
        return config;
    }

    RunConfig load_config(const std::string &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw ConfigError(path, "cannot open configuration file");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return parse_config(buffer.str());
    }

    std::string serialize_config(const RunConfig &config)
    {
        std::string out;
        std::string_view current;
        for (const auto &f : fields())
        {
            if (f.section != current)
            {
                if (!current.empty())
                    out += '\n';
                out += fmt::format("[{}]\n", f.section);
                current = f.section;
            }
            out += fmt::format("{} = {}\n", f.key, f.get(config));
        }
        return out;
    }

    SystemParams system_params(const RunConfig &c)
    {
        return SystemParams::from_dbm(c.transmit_power_dbm, c.noise_power_dbm, c.carrier_freq_ghz * 1e9,
                                      c.reflection_amplitude, RicianFactor(c.rician_kappa), c.rows, c.cols);
    }

    PathLossModel path_loss_model(const RunConfig &c)
    {
        const double gain = db_to_linear(c.antenna_gain_dbi);
        if (c.model == PathLossKind::powerlaw)
            return PowerLaw{c.exponent, c.nlos_exponent, gain};
        return Uma3gpp{c.carrier_freq_ghz * 1e9, c.bs_height_m, c.ris_height_m, c.user_height_m, gain, c.cascade_gain};
    }

    LayoutSpec layout_spec(const RunConfig &c)
    {
        constexpr double deg = std::numbers::pi / 180.0;
        LayoutSpec l;
        l.bs_ris_distance = c.bs_ris_distance_m;
        l.ris_user_distance = c.ris_user_distance_m;
        l.bs_height = c.bs_height_m;
        l.ris_height = c.ris_height_m;
        l.user_height = c.user_height_m;
        l.distances_are_3d = c.distances_are_3d;
        l.ris_rotation = c.ris_rotation_deg * deg;
        l.user_bearing = c.user_bearing_deg * deg;
        l.rows = c.rows;
        l.cols = c.cols;
        l.spacing_h = c.spacing_h_m;
        l.spacing_v = c.spacing_v_m;
        return l;
    }

} // namespace risq
