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

#include <random>
#include <string_view>
#include <vector>

#include "keyeq/hermitian.hpp"
#include "test_util.hpp"

namespace keyeq::testing {

inline hermitian::CurvePoly cp(const hermitian::HermitianCurve& c, std::string_view text)
{
    return hermitian::CurvePoly::parse(c, text);
}

/// Random reduced polynomial with x-degree <= max_x in every row.
inline hermitian::CurvePoly random_curve_poly(const hermitian::HermitianCurve& c, int max_x, std::mt19937_64& rng)
{
    hermitian::CurvePoly f(c);
    for (int b = 0; b < c.q(); ++b)
        f.set_row(b, random_poly(c.field(), max_x, rng));
    return f;
}

/// Monic polynomial with leading monomial of order `order` (a semigroup element).
inline hermitian::CurvePoly random_monic_of_order(const hermitian::HermitianCurve& c, int order,
                                                  std::mt19937_64& rng)
{
    hermitian::CurvePoly f(c);
    for (int o = 0; o < order; ++o)
        if (auto ab = c.monomial_of_order(o))
            f += hermitian::CurvePoly::monomial(c, random_elem(c.field(), rng), ab->first, ab->second);
    const auto ab = c.monomial_of_order(order);
    f += hermitian::CurvePoly::monomial(c, c.field().one(), ab->first, ab->second);
    return f;
}

}  // namespace keyeq::testing
