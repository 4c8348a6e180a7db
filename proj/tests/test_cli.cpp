/*
 * Copyright 2026 The keyeq Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "keyeq/cli/commands.hpp"

namespace cli = keyeq::cli;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "keyeq");
    std::vector<char*> argv;
    for (auto& a : args)
        argv.push_back(a.data());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("replay succeeds and is deterministic")
{
    for (const char* name : {"generic", "non-generic"}) {
        CAPTURE(name);
        const auto a = run({"replay", name});
        const auto b = run({"replay", name});
        CHECK(a.code == cli::kOk);
        CHECK(a.out == b.out);
        CHECK(a.out.find("result: OK") != std::string::npos);
        // One trace line per (m, i) for m = 0 .. 13.
        std::istringstream in(a.out);
        std::string line;
        int rows = 0;
        while (std::getline(in, line))
            rows += line.rfind("m=", 0) == 0;
        CHECK(rows == 42);
    }
    const auto g = run({"replay", "generic"});
    CHECK(g.out.find("f0 = x^2 + x + a^7") != std::string::npos);
    CHECK(g.out.find("positions: P4=(a, 1) P21=(a^6, a^4)") != std::string::npos);
    const auto n = run({"replay", "non-generic"});
    CHECK(n.out.find("f0 = x + a^6") != std::string::npos);
    CHECK(n.out.find("positions: P7=(a^2, a) P9=(a^2, a^4)") != std::string::npos);
}

TEST_CASE("usage errors exit with 2")
{
    CHECK(run({}).code == cli::kUsage);
    CHECK(run({"replay", "other"}).code == cli::kUsage);
    CHECK(run({"simulate", "--family", "rs"}).code == cli::kUsage);  // no k
    CHECK(run({"simulate", "--family", "rs", "--q", "12", "--k", "3"}).code == cli::kUsage);
    CHECK(run({"simulate", "--family", "rs", "--q", "16", "--k", "3", "--method", "guess"}).code == cli::kUsage);
    CHECK(run({"simulate", "--config", "/nonexistent/config.json"}).code == cli::kUsage);
    CHECK(run({"inspect", "field", "4", "1"}).code == cli::kUsage);
    CHECK(run({"inspect", "planet"}).code == cli::kUsage);
    CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("simulate: fixed seed gives identical reports")
{
    const std::vector<std::string> args = {"simulate", "--family", "rs", "--q", "16", "--k", "9", "--weight", "3",
                                           "--trials", "40", "--seed", "12"};
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.code == cli::kOk);
    CHECK(a.out == b.out);
    const auto j = json::parse(a.out);
    CHECK(j["success_rate"] == 1.0);
    CHECK(j["agreement_rate"] == 1.0);
    CHECK(j["n"] == 15);
    CHECK_FALSE(j.contains("wall_time_s"));
    auto other = args;
    other.back() = "13";
    CHECK(run(other).out != a.out);
    const auto t = json::parse(run({"simulate", "--family", "rs", "--q", "16", "--k", "9", "--trials", "2",
                                    "--timing"})
                                   .out);
    CHECK(t.contains("wall_time_s"));
}

TEST_CASE("simulate: weight zero")
{
    for (const char* fam : {"rs", "hermitian"}) {
        CAPTURE(fam);
        const auto r = run({"simulate", "--family", fam, "--q", "4", "--k", "2", "--m", "13", "--weight", "0",
                            "--trials", "25"});
        REQUIRE(r.code == cli::kOk);
        const auto j = json::parse(r.out);
        CHECK(j["success_rate"] == 1.0);
        CHECK(j["corrections"] == 0);
    }
}

TEST_CASE("simulate: large field round trip")
{
    const auto r = run({"simulate", "--family", "rs", "--q", "256", "--k", "239", "--weight", "8", "--trials",
                        "1000", "--seed", "3"});
    REQUIRE(r.code == cli::kOk);
    const auto j = json::parse(r.out);
    CHECK(j["success_rate"] == 1.0);
    CHECK(j["agreement_rate"] == 1.0);
}

TEST_CASE("simulate: config file with flag overrides and trace output")
{
    const std::string cfg_path = "test_cli_config.json";
    const std::string trace_path = "test_cli_trace.txt";
    {
        std::ofstream f(cfg_path);
        f << R"({"family": "hermitian", "q": 3, "m": 13, "weight": 2, "trials": 10, "seed": 4,
                 "method": "forney", "trace_out": ")"
          << trace_path << "\"}";
    }
    const auto r = run({"simulate", "--config", cfg_path, "--trials", "6"});
    REQUIRE(r.code == cli::kOk);
    const auto j = json::parse(r.out);
    CHECK(j["trials"] == 6);
    CHECK(j["method"] == "forney");
    CHECK_FALSE(j.contains("agreement_rate"));
    std::ifstream tr(trace_path);
    int lines = 0;
    for (std::string line; std::getline(tr, line);)
        ++lines;
    CHECK(lines == 6);
    std::remove(cfg_path.c_str());
    std::remove(trace_path.c_str());

    CHECK_THROWS_AS(cli::RunConfig::from_json(json::parse(R"({"colour": 1})")), cli::UsageError);
    CHECK_THROWS_AS(cli::RunConfig::from_json(json::parse(R"({"q": "nine"})")), cli::UsageError);
}

TEST_CASE("simulate: fixed positions and values")
{
    const auto r = run({"simulate", "--family", "hermitian", "--q", "3", "--m", "13", "--trials", "3"});
    CHECK(r.code == cli::kOk);
    cli::RunConfig c = cli::RunConfig::from_json(
        json::parse(R"({"family": "hermitian", "q": 3, "m": 13, "weight": 2, "positions": [6, 8],
                        "values": ["a^2", "a^7"], "trials": 4})"));
    std::ostringstream out;
    CHECK(cli::cmd_simulate(c, out) == cli::kOk);
    const auto j = json::parse(out.str());
    CHECK(j["success_rate"] == 1.0);
    CHECK(j["corrections"] == 8);
    c.positions = {6};
    CHECK_THROWS_AS(c.validate(), cli::UsageError);
}

TEST_CASE("inspect output")
{
    const auto f = run({"inspect", "field", "3", "2"});
    CHECK(f.code == cli::kOk);
    CHECK(f.out.find("a^2 = a + 1") != std::string::npos);
    const auto c = run({"inspect", "curve", "3"});
    CHECK(c.out.find("27 points") != std::string::npos);
    CHECK(c.out.find("P1=(1, a)\n") != std::string::npos);
    const auto h = run({"inspect", "code", "hermitian", "3", "8"});
    CHECK(h.out.find("row orders: 0,3,4,6,7,8") != std::string::npos);
    const auto g = run({"inspect", "code", "rs", "7", "3"});
    CHECK(g.out.find("n=6 k=3 r=3") != std::string::npos);
}
