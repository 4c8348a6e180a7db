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

#include "keyeq/cli/examples.hpp"

#include <stdexcept>

#include "keyeq_tables.hpp"

namespace keyeq::cli {

const WorkedExample& generic_example()
{
    static const WorkedExample ex{
        "generic",
        {{3, "a^2"}, {20, "a^7"}},
        13,
        {"x^2 + x + a^7", "y + a^5 x + a", "y^2 + a^7 x^2 + a^7 x + a^3"},
        {"a^5 x y^2 + y^2 + 2 x y + a x + 2", "a^5 x^3 + a^2 y^2 + a^2 x^2 + a y + a^5 x + a^6",
         "a^5 x^3 y + 2 x y^2 + a^2 x^2 y + 2 x^3 + a^7 y^2 + a^2 x y + x^2 + a^7 x + 1"},
        {"a^6 x + a^7", "0", "0"},
        {0, 3},
        tables::kGeneric,
    };
    return ex;
}

const WorkedExample& non_generic_example()
{
    static const WorkedExample ex{
        "non-generic",
        {{6, "a^2"}, {8, "a^7"}},
        13,
        {"x + a^6", "x y + a^6 y + a^6 x + 2", "y^2 + a^7 x y + a^2 y + a^5 x + a^2"},
        {"a^5 y^2 + a^7 y + 1", "a^5 x^4 + y + a^6",
         "a^5 x^3 y + 2 x^4 + a^7 x^2 y + a x^3 + a x y + a^3 x^2 + a^5 x + 2"},
        {"a^3", "y + a^6", "0"},
        {0, 4},
        tables::kNonGeneric,
    };
    return ex;
}

const WorkedExample& example_by_name(const std::string& name)
{
    if (name == "generic")
        return generic_example();
    if (name == "non-generic")
        return non_generic_example();
    throw std::invalid_argument("unknown example '" + name + "' (expected generic or non-generic)");
}

std::vector<Elem> example_error(const hermitian::HermitianCurve& curve, const WorkedExample& ex)
{
    std::vector<Elem> e(curve.n(), curve.field().zero());
    for (const auto& [k, v] : ex.errors)
        e.at(k) = curve.field().parse(v);
    return e;
}

}  // namespace keyeq::cli
