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
#include "risq/analysis.hpp"

#include "support.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace risq;

namespace
{
    struct Outcome
    {
        int code;
        std::string out;
        std::string err;
    };

    Outcome run(std::vector<std::string> args)
    {
        std::ostringstream out, err;
        const int code = cli::run_command(args, out, err);
        return {code, out.str(), err.str()};
    }

    std::filesystem::path scratch(const std::string &name)
    {
        const auto dir = std::filesystem::temp_directory_path() / "risq_cli_test";
        std::filesystem::create_directories(dir);
        return dir / name;
    }

    std::string write_config(const std::string &name, const std::string &text)
    {
        const auto path = scratch(name);
        std::ofstream(path) << text;
        return path.string();
    }

    std::string slurp(const std::filesystem::path &p)
    {
        std::ifstream in(p, std::ios::binary);
        return {std::istreambuf_iterator<char>(in), {}};
    }

    const std::string kReference = risq::testing::source_path("configs/uma_reradiation.cfg");

    std::size_t line_count(const std::string &s) { return std::size_t(std::count(s.begin(), s.end(), '\n')); }
}

TEST(Cli, MissingConfigPrintsUsage)
{
    const auto r = run({"kreq"});
    EXPECT_EQ(r.code, cli::kConfigError);
    EXPECT_TRUE(r.out.empty());
    EXPECT_NE(r.err.find("--config"), std::string::npos) << r.err;
    EXPECT_NE(r.err.find("Usage"), std::string::npos) << r.err;
}

TEST(Cli, UnknownSubcommand)
{
    EXPECT_EQ(run({"plot", "--config", kReference}).code, cli::kConfigError);
    EXPECT_EQ(run({}).code, cli::kConfigError);
}

TEST(Cli, KreqJson)
{
    const auto r = run({"kreq", "--config", kReference, "--format", "json"});
    ASSERT_EQ(r.code, cli::kSuccess) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    const auto c = load_config(kReference);
    const auto oracle = required_bits(risq::testing::reference_budget(c), RicianFactor(c.rician_kappa),
                                      double(c.rows * c.cols), c.threshold);
    EXPECT_EQ(doc["k_req_raw"].get<double>(), oracle.raw);
    EXPECT_EQ(doc["k_req"].get<int>(), oracle.bits);
    EXPECT_EQ(doc["feasible"].get<bool>(), true);
    EXPECT_EQ(doc["scenario"], "kreq");
    EXPECT_EQ(doc["config"]["geometry"]["rows"], 16);
}

TEST(Cli, RateSizeCsvSchema)
{
    const auto r = run({"rate-size", "--config", kReference, "--trials", "50"});
    ASSERT_EQ(r.code, cli::kSuccess) << r.err;
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "N,kappa,rate_analytic,rate_sim,ci95");
    EXPECT_EQ(line_count(r.out), 1u + 9u * 3u);
    EXPECT_EQ(r.out.find('\r'), std::string::npos);
}

TEST(Cli, ConfigErrorsExitOne)
{
    const auto path = write_config("bad_key.cfg", "[system]\nrician_kappa = 4\nrician_kapa = 3\n[geometry]\nrows = 1\ncols = 1\n");
    const auto r = run({"kreq", "--config", path});
    EXPECT_EQ(r.code, cli::kConfigError);
    EXPECT_TRUE(r.out.empty());
    EXPECT_NE(r.err.find("rician_kapa"), std::string::npos) << r.err;
    EXPECT_EQ(run({"kreq", "--config", scratch("missing.cfg").string()}).code, cli::kConfigError);
    EXPECT_EQ(run({"kreq", "--config", kReference, "--format", "xml"}).code, cli::kConfigError);
    EXPECT_EQ(run({"kreq", "--config", kReference, "--trials", "1"}).code, cli::kConfigError);
}

TEST(Cli, InfeasibleThresholdExitsTwo)
{
    const auto path = write_config("unit_threshold.cfg",
                                   "[system]\nrician_kappa = 4\n[geometry]\nrows = 3\ncols = 3\n[run]\nthreshold = 1\n");
    const auto r = run({"kreq", "--config", path, "--format", "json"});
    EXPECT_EQ(r.code, cli::kInfeasible);
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["feasible"], false);
    EXPECT_TRUE(doc["k_req"].is_null());
    EXPECT_FALSE(r.err.empty());
}

TEST(Cli, OutputFile)
{
    const auto target = scratch("kreq.csv");
    std::filesystem::remove(target);
    const auto r = run({"kreq", "--config", kReference, "--out", target.string()});
    ASSERT_EQ(r.code, cli::kSuccess) << r.err;
    EXPECT_TRUE(r.out.empty());
    const auto text = slurp(target);
    EXPECT_EQ(text.substr(0, text.find('\n')), "M,N,k_req_raw,k_req,feasible");
}

TEST(Cli, ByteIdenticalAcrossThreads)
{
    const auto a = run({"rate-size", "--config", kReference, "--trials", "200", "--threads", "1"});
    const auto b = run({"rate-size", "--config", kReference, "--trials", "200", "--threads", "3"});
    const auto c = run({"rate-size", "--config", kReference, "--trials", "200", "--threads", "1"});
    ASSERT_EQ(a.code, cli::kSuccess);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, c.out);
    EXPECT_NE(a.out, run({"rate-size", "--config", kReference, "--trials", "200", "--seed", "2"}).out);
}

TEST(Cli, AllSubcommandsRun)
{
    const auto placement = risq::testing::source_path("configs/powerlaw_placement.cfg");
    EXPECT_EQ(run({"deg-distance", "--config", placement}).code, cli::kSuccess);
    EXPECT_EQ(run({"single", "--config", kReference, "--trials", "100"}).code, cli::kSuccess);
    EXPECT_EQ(run({"deg-bits", "--config", kReference, "--trials", "20", "--format", "json"}).code, cli::kSuccess);
}
