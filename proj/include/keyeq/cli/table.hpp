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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "keyeq/hermitian/kotter.hpp"

namespace keyeq::cli {

/**
 * One line of a solver table: "m | i | j | r | tf | mu | p | f | phi | g | psi".
 * "-" (or an empty cell) means the value is not recorded; for f, phi, g and
 * psi it means unchanged from the previous iteration. Row m = -1 holds the
 * initial state. Lines starting with '#' are comments.
 */
struct TableRow {
    int m = 0;
    int i = 0;
    std::optional<int> j, r, p;
    std::optional<std::string> tf, mu, f, phi, g, psi;
};

/// Throws std::invalid_argument with the line number on malformed input.
std::vector<TableRow> parse_table(std::string_view text);

/// Compares a solver trace (rows in (m, i) order) with a table, parsing every
/// recorded cell and comparing values. Returns one message per difference.
std::vector<std::string> compare_table(const hermitian::HermitianCurve& curve, const std::vector<TableRow>& table,
                                       const std::vector<hermitian::KotterRow>& trace);

}  // namespace keyeq::cli
