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

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "keyeq/hermitian/curve.hpp"

namespace keyeq::cli {

/// A two-error example over the q = 3 Hermitian curve, with its expected results.
struct WorkedExample {
    std::string name;
    /// (point index, error value) pairs.
    std::vector<std::pair<std::size_t, std::string>> errors;
    int last_iteration;  ///< solver runs iterations 0 .. last_iteration
    std::vector<std::string> locators;
    std::vector<std::string> evaluators;
    std::vector<std::string> aux;
    std::vector<int> footprint;
    /// Step table in the format read by parse_table.
    std::string table;
};

/// Errors a^2 at (a, 1) and a^7 at (a^6, 2): distinct x-coordinates.
const WorkedExample& generic_example();
/// Errors a^2 at (a^2, a) and a^7 at (a^2, 2): both on the line x = a^2.
const WorkedExample& non_generic_example();
/// Throws std::invalid_argument for names other than "generic" and "non-generic".
const WorkedExample& example_by_name(const std::string& name);

/// Full error vector of the example on the given curve.
std::vector<Elem> example_error(const hermitian::HermitianCurve& curve, const WorkedExample& ex);

}  // namespace keyeq::cli
