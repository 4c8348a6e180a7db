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

#include <fstream>
#include <ostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "keyeq/cli/commands.hpp"

namespace keyeq::cli {

int run(int argc, char** argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Key-equation decoders for Reed-Solomon and Hermitian codes"};
    app.require_subcommand(1);

    std::string example;
    auto* replay = app.add_subcommand("replay", "Run a q = 3 Hermitian example and check it against pinned data");
    replay->add_option("case", example, "generic or non-generic")->required()->check(
        CLI::IsMember({"generic", "non-generic"}));

    std::string config_path;
    RunConfig flags;
    std::optional<std::string> family, method, trace_out, report_out;
    std::optional<unsigned> q;
    std::optional<int> k, m, weight, trials;
    std::optional<std::uint64_t> seed;
    bool timing = false;
    auto* sim = app.add_subcommand("simulate", "Encode, corrupt and decode random words");
    sim->add_option("--config", config_path, "JSON file with run settings");
    sim->add_option("--family", family, "rs or hermitian");
    sim->add_option("--q", q, "field order (rs) or curve parameter (hermitian)");
    sim->add_option("--k", k, "rs dimension");
    sim->add_option("--m", m, "hermitian order bound");
    sim->add_option("--weight", weight, "error weight");
    sim->add_option("--trials", trials, "number of trials");
    sim->add_option("--seed", seed, "random seed");
    sim->add_option("--method", method, "forney, horiguchi or both");
    sim->add_option("--trace-out", trace_out, "per-trial trace file");
    sim->add_option("--report-out", report_out, "report file");
    sim->add_flag("--timing", timing, "include wall time in the report");

    std::string target;
    std::vector<std::string> params;
    auto* insp = app.add_subcommand("inspect", "Print field, curve or code tables");
    insp->add_option("target", target, "field, curve or code")->required();
    insp->add_option("params", params, "field: p m; curve: q; code: rs q k | hermitian q m");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*replay)
            return cmd_replay(example, out);
        if (*insp)
            return cmd_inspect(target, params, out);

        RunConfig cfg;
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in)
                throw UsageError("cannot open config '" + config_path + "'");
            nlohmann::json j;
            try {
                in >> j;
            } catch (const nlohmann::json::exception& ex) {
                throw UsageError(std::string("config is not valid JSON: ") + ex.what());
            }
            cfg = RunConfig::from_json(j);
        }
        if (family)
            cfg.family = *family;
        if (q)
            cfg.q = *q;
        if (k)
            cfg.k = *k;
        if (m)
            cfg.m = *m;
        if (weight)
            cfg.weight = *weight;
        if (trials)
            cfg.trials = *trials;
        if (seed)
            cfg.seed = *seed;
        if (method)
            cfg.method = *method;
        if (trace_out)
            cfg.trace_out = *trace_out;
        if (report_out)
            cfg.report_out = *report_out;
        if (timing)
            cfg.timing = true;
        return cmd_simulate(cfg, out);
    } catch (const UsageError& ex) {
        err << "error: " << ex.what() << "\n";
        return kUsage;
    }
}

}  // namespace keyeq::cli
