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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace keyeq::cli {

/// Process exit codes.
enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2 };

/// Thrown for invalid command parameters; maps to kUsage.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string family = "rs";  ///< "rs" or "hermitian"
    /// Field order for rs; curve parameter q (field GF(q^2)) for hermitian.
    unsigned q = 16;
    std::optional<int> k;  ///< rs dimension
    std::optional<int> m;  ///< hermitian order bound of the check rows
    int weight = 1;
    bool random_positions = true;
    bool random_values = true;
    std::vector<std::size_t> positions;  ///< used when !random_positions
    std::vector<std::string> values;     ///< used when !random_values
    int trials = 100;
    std::uint64_t seed = 1;
    std::string method = "both";  ///< forney, horiguchi or both
    std::string trace_out;        ///< per-trial lines, empty for none
    std::string report_out;       ///< report file, empty for stdout only
    bool timing = false;          ///< add wall time to the report

    /// Reads the keys of a JSON object; unknown keys are a UsageError.
    static RunConfig from_json(const nlohmann::json& j);
    /// Throws UsageError on inconsistent settings.
    void validate() const;
};

/// Solver run for a named example; prints the trace and a summary, then
/// compares everything with the pinned data. Returns kOk or kMismatch.
int cmd_replay(const std::string& name, std::ostream& out);

/// Encode, corrupt, decode; writes a JSON report. Returns kOk, or kMismatch
/// if some correctable trial failed or the two methods disagreed.
int cmd_simulate(const RunConfig& cfg, std::ostream& out);

/// target: "field" (params p m), "curve" (q), "code" (rs q k | hermitian q m).
int cmd_inspect(const std::string& target, const std::vector<std::string>& params, std::ostream& out);

/// Command-line entry point.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace keyeq::cli
