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

#include "keyeq/hermitian/star.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace keyeq::hermitian {

StarPoly::StarPoly(const HermitianCurve& curve, std::vector<LaurentTail> components)
    : curve_(&curve), comps_(std::move(components))
{
    if (comps_.size() != static_cast<std::size_t>(curve.q()))
        throw std::invalid_argument("star expansion needs q components");
}

int StarPoly::end() const
{
    int e = comps_.front().end();
    for (const auto& c : comps_)
        e = std::min(e, c.end());
    return e;
}

StarPoly operator-(const StarPoly& a, const StarPoly& b)
{
    if (a.curve_ != b.curve_)
        throw std::invalid_argument("star expansions belong to different curves");
    std::vector<LaurentTail> d;
    for (std::size_t i = 0; i < a.comps_.size(); ++i)
        d.push_back(a.comps_[i] - b.comps_[i]);
    return {*a.curve_, std::move(d)};
}

StarPoly to_star(const CurvePoly& f, int end)
{
    const HermitianCurve& C = f.curve();
    const int q = C.q();
    // y^b = zeta*_(q-1-b) for b < q-1, and y^(q-1) = zeta*_0 - zeta*_(q-1).
    std::vector<Poly> t(static_cast<std::size_t>(q), Poly(C.field()));
    t[0] = f.row(q - 1);
    for (int c = 1; c < q; ++c)
        t[static_cast<std::size_t>(c)] = f.row(q - 1 - c);
    t[static_cast<std::size_t>(q - 1)] -= f.row(q - 1);
    std::vector<LaurentTail> comps;
    for (const Poly& p : t)
        comps.push_back(LaurentTail::from_poly(p, end));
    return {C, std::move(comps)};
}

CurvePoly from_star(const StarPoly& s)
{
    const HermitianCurve& C = s.curve();
    const Field& F = C.field();
    const int q = C.q();
    std::vector<Poly> t;
    for (int c = 0; c < q; ++c) {
        const LaurentTail& comp = s.component(c);
        if (!comp.zero_on(0, comp.end()))
            throw std::invalid_argument("star expansion has terms of negative x-degree");
        // Index a < 0 carries x^(-a-1).
        std::vector<Field::Value> raw;
        for (int a = -1; a >= comp.begin(); --a)
            raw.push_back(comp.coeff(a).value());
        t.emplace_back(F, std::move(raw));
    }
    CurvePoly f(C);
    f.set_row(q - 1, t[0]);
    for (int c = 1; c < q; ++c)
        f.set_row(q - 1 - c, t[static_cast<std::size_t>(c)]);
    f.set_row(0, f.row(0) + t[0]);
    return f;
}

std::vector<StarTerm> star_mul_table(int b, int c, int q)
{
    if (q < 2 || b < 0 || c < 0 || b >= q || c >= q)
        throw std::out_of_range("star table index out of range: b=" + std::to_string(b) + " c=" + std::to_string(c) +
                                " q=" + std::to_string(q));
    if (b == 0 && c == 0)
        return {{1, 0, 0}};
    if (b == c)
        return {{1, 0, 0}, {-1, 0, q - 1}};
    if (c == 0)
        return {{1, q + 1, q - b}};
    if (b > c)
        return {{1, q + 1, q + c - b}, {-1, 0, q - 1 + c - b}};
    return {{1, 0, c - b}};
}

}  // namespace keyeq::hermitian
