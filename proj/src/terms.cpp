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

#include "keyeq/detail/terms.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace keyeq::detail {

namespace {

int parse_exponent(std::string_view tok, std::string_view whole)
{
    if (tok.size() == 1)
        return 1;
    if (tok[1] != '^')
        throw std::invalid_argument("bad monomial '" + std::string(tok) + "' in '" + std::string(whole) + "'");
    int e = 0;
    auto [ptr, ec] = std::from_chars(tok.data() + 2, tok.data() + tok.size(), e);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || e < 0)
        throw std::invalid_argument("bad exponent in '" + std::string(whole) + "'");
    return e;
}

}  // namespace

std::vector<Term> parse_terms(const Field& field, std::string_view text)
{
    std::vector<Term> terms;
    Term cur{field.one()};
    bool have_factor = false;
    bool negate = false;

    auto flush = [&] {
        if (!have_factor)
            throw std::invalid_argument("empty term in '" + std::string(text) + "'");
        if (negate)
            cur.coeff = -cur.coeff;
        terms.push_back(cur);
        cur = Term{field.one()};
        have_factor = false;
        negate = false;
    };

    std::size_t i = 0;
    while (i < text.size()) {
        const char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == '*') {
            ++i;
            continue;
        }
        if (ch == '+' || ch == '-') {
            if (have_factor)
                flush();
            else if (!terms.empty() || ch == '+')
                throw std::invalid_argument("dangling sign in '" + std::string(text) + "'");
            negate = ch == '-';
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != '+' &&
               text[j] != '*' && !(text[j] == '-' && j > i && text[j - 1] != '^'))
            ++j;
        const std::string_view tok = text.substr(i, j - i);
        if (tok.front() == 'x')
            cur.x_exp += parse_exponent(tok, text);
        else if (tok.front() == 'y')
            cur.y_exp += parse_exponent(tok, text);
        else
            cur.coeff = cur.coeff * field.parse(tok);
        have_factor = true;
        i = j;
    }
    if (have_factor)
        flush();
    else if (negate)
        throw std::invalid_argument("dangling sign in '" + std::string(text) + "'");
    return terms;
}

std::string format_power(char var, int exp)
{
    if (exp == 0)
        return {};
    if (exp == 1)
        return std::string(1, var);
    return std::string(1, var) + "^" + std::to_string(exp);
}

std::string format_term(Elem coeff, const std::string& monomial)
{
    if (monomial.empty())
        return coeff.to_string();
    if (coeff.is_one())
        return monomial;
    return coeff.to_string() + " " + monomial;
}

}  // namespace keyeq::detail
