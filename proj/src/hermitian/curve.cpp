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

#include "keyeq/hermitian/curve.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace keyeq::hermitian {

std::shared_ptr<const HermitianCurve> HermitianCurve::build(int q)
{
    static constexpr int kSupported[] = {2, 3, 4, 5, 7, 8};
    if (std::find(std::begin(kSupported), std::end(kSupported), q) == std::end(kSupported))
        throw std::invalid_argument("unsupported curve parameter q = " + std::to_string(q) +
                                    " (expected one of 2, 3, 4, 5, 7, 8)");
    auto field = Field::of_order(static_cast<std::uint32_t>(q * q));
    return std::shared_ptr<const HermitianCurve>(new HermitianCurve(std::move(field), q));
}

HermitianCurve::HermitianCurve(std::shared_ptr<const Field> field, int q) : field_(std::move(field)), q_(q)
{
    const Field& F = *field_;
    // Nonzero elements by increasing log, then zero.
    std::vector<Elem> ordered;
    for (std::uint32_t k = 0; k + 1 < F.order(); ++k)
        ordered.push_back(F.exp(k));
    ordered.push_back(F.zero());
    for (Elem x : ordered) {
        const Elem norm = x.pow(q + 1);
        for (Elem y : ordered)
            if (y.pow(q) + y == norm)
                points_.push_back({x, y});
    }
    if (points_.size() != static_cast<std::size_t>(q) * q * q)
        throw std::logic_error("Hermitian curve has " + std::to_string(points_.size()) + " affine points");
}

bool HermitianCurve::in_semigroup(int m) const
{
    return monomial_of_order(m).has_value();
}

std::optional<std::pair<int, int>> HermitianCurve::monomial_of_order(int m) const
{
    if (m < 0)
        return std::nullopt;
    // aq + b(q+1) = m forces b = m mod q.
    const int b = m % q_;
    const int rest = m - b * (q_ + 1);
    if (rest < 0)
        return std::nullopt;
    return std::pair{rest / q_, b};
}

std::vector<int> HermitianCurve::semigroup_up_to(int bound) const
{
    std::vector<int> out;
    for (int m = 0; m <= bound; ++m)
        if (in_semigroup(m))
            out.push_back(m);
    return out;
}

}  // namespace keyeq::hermitian
