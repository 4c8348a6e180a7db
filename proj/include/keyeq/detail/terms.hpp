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

#include <string>
#include <string_view>
#include <vector>

#include "keyeq/galois.hpp"

namespace keyeq::detail {

struct Term {
    Elem coeff;
    int x_exp = 0;
    int y_exp = 0;
};

/// Parses sums like "a^5 x^3 y + 2 y^2 - x + a" into terms. Factors within a
/// term are separated by whitespace; coefficients use Field::parse syntax.
std::vector<Term> parse_terms(const Field& field, std::string_view text);

/// Renders coeff * monomial, omitting a unit coefficient unless the monomial is 1.
std::string format_term(Elem coeff, const std::string& monomial);

std::string format_power(char var, int exp);

}  // namespace keyeq::detail
