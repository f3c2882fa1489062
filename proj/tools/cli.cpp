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

#include "cli.hpp"

#include <risq/experiments.hpp>

#include <CLI11.hpp>
#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>

namespace risq::cli
{
    namespace
    {
        spdlog::level::level_enum level_from_env()
        {
            const char *env = std::getenv("RIS_LOG");
            if (!env)
                return spdlog::level::warn;
            const std::string v(env);
            if (v == "error")
                return spdlog::level::err;
            if (v == "info")
                return spdlog::level::info;
            if (v == "debug")
                return spdlog::level::debug;
            return spdlog::level::warn;
        }

        std::shared_ptr<spdlog::logger> make_logger(std::ostream &err)
        {
            auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err, true);
            auto logger = std::make_shared<spdlog::logger>("risq", sink);
            logger->set_pattern("risq: %l: %v");
            logger->set_level(level_from_env());
            return logger;
        }

        std::string render(const Report &report, const RunConfig &config)
        {
            return config.format == OutputFormat::json ? to_json(report, config) : to_csv(report.table);
        }
    } // namespace

    int run_command(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
    {
        auto log = make_logger(err);

        CLI::App app{"Rate and phase-quantization analysis for RIS-assisted uplinks", "risq"};
        app.require_subcommand(1);

        std::string config_path;
        std::optional<std::uint64_t> seed;
        std::optional<std::size_t> trials;
        std::optional<unsigned> threads;
        std::string out_path;
        std::string format;

        struct Command
        {
            const char *name;
            const char *help;
            Report (*run)(const RunConfig &);
        };
        const Command commands[] = {
            {"rate-size", "achievable rate vs panel size (analytic and simulated)", &run_rate_size},
            {"deg-bits", "rate degradation vs coding bits", &run_degradation_bits},
            {"deg-distance", "rate degradation vs BS-RIS distance", &run_degradation_distance},
            {"kreq", "required coding bits for the configured panel", &run_required_bits},
            {"single", "rate and degradation for one configuration", &run_single},
        };

        for (const auto &cmd : commands)
        {
            auto *sub = app.add_subcommand(cmd.name, cmd.help);
            sub->add_option("--config", config_path, "configuration file")->required();
            sub->add_option("--seed", seed, "master seed (overrides [run] seed)");
            sub->add_option("--trials", trials, "Monte Carlo trials (overrides [run] trials)");
            sub->add_option("--threads", threads, "worker threads, 0 = all cores (overrides [run] threads)");
            sub->add_option("--out", out_path, "output file (default: standard output)");
            sub->add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "json"}));
        }

        std::vector<std::string> reversed(args.rbegin(), args.rend());
        try
        {
            app.parse(reversed);
        }
        catch (const CLI::CallForHelp &)
        {
            err << app.help();
            return kSuccess;
        }
        catch (const CLI::ParseError &e)
        {
            err << "risq: " << e.what() << "\n\n";
            const auto selected = app.get_subcommands();
            err << (selected.empty() ? app.help() : selected.front()->help());
            return kConfigError;
        }

        const std::string name = app.get_subcommands().front()->get_name();
        const auto *cmd = std::find_if(std::begin(commands), std::end(commands),
                                       [&](const Command &c) { return name == c.name; });

        RunConfig config;
        try
        {
            config = load_config(config_path);
            if (seed)
                config.seed = *seed;
            if (trials)
                config.trials = *trials;
            if (threads)
                config.threads = *threads;
            if (!out_path.empty())
                config.output = out_path;
            if (!format.empty())
                config.format = format == "json" ? OutputFormat::json : OutputFormat::csv;
            validate(config);
        }
        catch (const std::exception &e)
        {
            log->error("{}", e.what());
            return kConfigError;
        }

        log->info("running {} (seed {}, trials {})", name, config.seed, config.trials);

        Report report;
        try
        {
            report = cmd->run(config);
        }
        catch (const InfeasibleError &e)
        {
            log->error("{}", e.what());
            return kInfeasible;
        }
        catch (const std::exception &e)
        {
            log->error("{}", e.what());
            return kConfigError;
        }

        const std::string text = render(report, config);
        if (config.output.empty())
        {
            out << text;
        }
        else
        {
            std::ofstream file(config.output, std::ios::binary);
            if (!file)
            {
                log->error("cannot open output file '{}'", config.output);
                return kConfigError;
            }
            file << text;
            log->info("wrote {}", config.output);
        }

        for (const auto &[key, value] : report.summary)
            if (key == "feasible" && std::get_if<bool>(&value) && !std::get<bool>(value))
            {
                log->error("required coding bits: threshold {} is infeasible", config.threshold);
                return kInfeasible;
            }
        return kSuccess;
    }

} // namespace risq::cli
