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

#include "keyeq/hermitian/footprint.hpp"

#include <algorithm>
#include <stdexcept>

namespace keyeq::hermitian {

namespace {

struct Pivot {
    std::size_t col;
    std::vector<Field::Value> vec;
    CurvePoly comb;
};

}  // namespace

FootprintReport footprint_oracle(const HermitianCurve& curve, const std::vector<Elem>& e)
{
    if (e.size() != curve.n())
        throw std::invalid_argument("error vector length differs from the curve's point count");
    const Field& F = curve.field();
    const int q = curve.q();
    std::vector<std::size_t> supp;
    for (std::size_t k = 0; k < e.size(); ++k)
        if (!e[k].is_zero())
            supp.push_back(k);

    FootprintReport rep;
    rep.sigma.assign(static_cast<std::size_t>(q), kNegInf);
    rep.locators.assign(static_cast<std::size_t>(q), CurvePoly(curve));
    std::vector<Pivot> pivots;
    int found = 0;
    for (int m = 0; found < q; ++m) {
        const auto ab = curve.monomial_of_order(m);
        if (!ab)
            continue;
        const std::size_t cls = static_cast<std::size_t>(m % q);
        if (rep.sigma[cls] != kNegInf)
            continue;
        CurvePoly comb = CurvePoly::monomial(curve, F.one(), ab->first, ab->second);
        std::vector<Field::Value> vec(supp.size());
        for (std::size_t t = 0; t < supp.size(); ++t)
            vec[t] = comb(curve.point(supp[t])).value();
        for (const Pivot& pv : pivots) {
            const Field::Value c = vec[pv.col];
            if (c == 0)
                continue;
            for (std::size_t t = 0; t < vec.size(); ++t)
                vec[t] = F.sub(vec[t], F.mul(c, pv.vec[t]));
            comb -= Elem(F, c) * pv.comb;
        }
        const auto nz = std::find_if(vec.begin(), vec.end(), [](Field::Value v) { return v != 0; });
        if (nz == vec.end()) {
            rep.sigma[cls] = m;
            rep.locators[cls] = std::move(comb);
            ++found;
            continue;
        }
        rep.delta.push_back(m);
        const std::size_t col = static_cast<std::size_t>(nz - vec.begin());
        const Field::Value inv = F.inv(vec[col]);
        for (auto& v : vec)
            v = F.mul(v, inv);
        comb = Elem(F, inv) * comb;
        for (Pivot& pv : pivots) {
            const Field::Value c = pv.vec[col];
            if (c == 0)
                continue;
            for (std::size_t t = 0; t < vec.size(); ++t)
                pv.vec[t] = F.sub(pv.vec[t], F.mul(c, vec[t]));
            pv.comb -= Elem(F, c) * comb;
        }
        pivots.push_back({col, std::move(vec), std::move(comb)});
    }
    if (rep.delta.size() != supp.size())
        throw std::logic_error("footprint size differs from the error weight");
    rep.sigma_max = *std::max_element(rep.sigma.begin(), rep.sigma.end());
    if (!rep.delta.empty())
        rep.delta_max = rep.delta.back();
    return rep;
}

FootprintReport footprint_from_locators(const HermitianCurve& curve, const std::vector<CurvePoly>& f)
{
    const int q = curve.q();
    if (f.size() != static_cast<std::size_t>(q))
        throw std::invalid_argument("expected one polynomial per residue class");
    FootprintReport rep;
    for (int i = 0; i < q; ++i) {
        const int r = f[static_cast<std::size_t>(i)].rho();
        if (r == kNegInf || ((r % q) + q) % q != i)
            throw std::invalid_argument("polynomial " + std::to_string(i) + " has no order in class " +
                                        std::to_string(i));
        rep.sigma.push_back(r);
        for (int d = curve.min_in_class(i); d < r; d += q)
            rep.delta.push_back(d);
    }
    std::sort(rep.delta.begin(), rep.delta.end());
    rep.locators = f;
    rep.sigma_max = *std::max_element(rep.sigma.begin(), rep.sigma.end());
    if (!rep.delta.empty())
        rep.delta_max = rep.delta.back();
    return rep;
}

int termination_bound(const FootprintReport& report, int q)
{
    return report.sigma_max + std::max(report.delta_max, q * q - q - 1);
}

}  // namespace keyeq::hermitian
