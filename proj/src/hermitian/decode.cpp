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

#include "keyeq/hermitian/decode.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "keyeq/hermitian/kotter.hpp"
#include "keyeq/hermitian/syndrome.hpp"

namespace keyeq::hermitian {

std::vector<std::size_t> locate_errors(const HermitianCurve& curve, const std::vector<CurvePoly>& locators)
{
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < curve.n(); ++k) {
        const Point& P = curve.point(k);
        if (std::all_of(locators.begin(), locators.end(), [&](const CurvePoly& f) { return f(P).is_zero(); }))
            out.push_back(k);
    }
    return out;
}

std::vector<std::optional<Elem>> forney_values(const HermitianCurve& curve, const CurvePoly& f,
                                               const CurvePoly& phi, const std::vector<std::size_t>& points)
{
    const CurvePoly df = f.derivative();
    std::vector<std::optional<Elem>> out;
    out.reserve(points.size());
    for (std::size_t k : points) {
        const Point& P = curve.point(k);
        const Elem d = df(P);
        if (d.is_zero())
            out.emplace_back(std::nullopt);
        else
            out.emplace_back(phi(P) / d);
    }
    return out;
}

std::vector<std::optional<Elem>> horiguchi_values(const HermitianCurve& curve, const std::vector<CurvePoly>& f,
                                                  const std::vector<CurvePoly>& g,
                                                  const std::vector<std::size_t>& points)
{
    if (f.size() != g.size())
        throw std::invalid_argument("locator and auxiliary lists differ in length");
    std::vector<CurvePoly> df;
    for (const auto& fi : f)
        df.push_back(fi.derivative());
    std::vector<std::optional<Elem>> out;
    out.reserve(points.size());
    for (std::size_t k : points) {
        const Point& P = curve.point(k);
        Elem sum = curve.field().zero();
        for (std::size_t i = 0; i < f.size(); ++i)
            sum += df[i](P) * g[i](P);
        if (sum.is_zero())
            out.emplace_back(std::nullopt);
        else
            out.emplace_back(sum.inv());
    }
    return out;
}

std::vector<int> check_row_orders(const HermitianCurve& curve, int m)
{
    if (!curve.in_semigroup(m)) {
        int lo = m, hi = m;
        while (lo >= 0 && !curve.in_semigroup(lo))
            --lo;
        while (!curve.in_semigroup(hi))
            ++hi;
        std::string msg = "order " + std::to_string(m) + " is not a pole order; nearest valid orders are ";
        msg += lo >= 0 ? std::to_string(lo) + " and " + std::to_string(hi) : std::to_string(hi);
        throw std::invalid_argument(msg);
    }
    const int q = curve.q();
    std::vector<int> out;
    for (int o : curve.semigroup_up_to(m)) {
        const auto ab = curve.monomial_of_order(o);
        if (ab->first < q * q)
            out.push_back(o);
    }
    return out;
}

Matrix code_check_matrix(const HermitianCurve& curve, int m)
{
    Matrix H(curve.field(), 0, curve.n());
    for (int o : check_row_orders(curve, m)) {
        const auto ab = curve.monomial_of_order(o);
        const CurvePoly mono = CurvePoly::monomial(curve, curve.field().one(), ab->first, ab->second);
        std::vector<Elem> row;
        row.reserve(curve.n());
        for (const Point& P : curve.points())
            row.push_back(mono(P));
        H.append_row(row);
    }
    return H;
}

Matrix code_generator_matrix(const HermitianCurve& curve, int m)
{
    return code_check_matrix(curve, m).null_space();
}

std::vector<Elem> encode(const Matrix& generator, const std::vector<Elem>& message)
{
    if (message.size() != generator.rows())
        throw std::invalid_argument("message length " + std::to_string(message.size()) + " differs from dimension " +
                                    std::to_string(generator.rows()));
    return generator.left_mul(message);
}

const char* to_string(DecodeStatus s)
{
    switch (s) {
    case DecodeStatus::success:
        return "success";
    case DecodeStatus::window_exhausted:
        return "window_exhausted";
    case DecodeStatus::root_count_mismatch:
        return "root_count_mismatch";
    case DecodeStatus::evaluation_failure:
        return "evaluation_failure";
    case DecodeStatus::residual_nonzero:
        return "residual_nonzero";
    }
    return "?";
}

DecodeResult decode(const HermitianCurve& curve, int m, const std::vector<Elem>& received, EvalMethod method)
{
    if (received.size() != curve.n())
        throw std::invalid_argument("received word length differs from the curve's point count");
    check_row_orders(curve, m);
    const int q = curve.q();
    const int width = m / q + 1;
    const SyndromeArray S = syndrome_array(curve, received, width, m);

    DecodeResult out{ErrorReport{}, received};
    ErrorReport& rep = out.report;
    rep.method = method;
    if (S.is_zero())
        return out;

    const KotterResult kr = kotter_solve(curve, S, m);
    rep.iterations = m + 1;
    for (const auto& st : kr.state) {
        rep.locators.push_back(st.f);
        rep.evaluators.push_back(st.phi);
        rep.aux.push_back(st.g);
    }
    rep.footprint = footprint_from_locators(curve, rep.locators);
    rep.bound = termination_bound(rep.footprint, q);
    if (rep.bound > m) {
        rep.status = DecodeStatus::window_exhausted;
        return out;
    }

    const auto pos = locate_errors(curve, rep.locators);
    if (pos.size() != rep.footprint.delta.size()) {
        rep.status = DecodeStatus::root_count_mismatch;
        return out;
    }

    std::vector<std::optional<Elem>> vals(pos.size());
    if (method == EvalMethod::horiguchi) {
        vals = horiguchi_values(curve, rep.locators, rep.aux, pos);
    } else {
        // Per point, the first locator with a simple zero there.
        for (std::size_t t = 0; t < pos.size(); ++t) {
            for (std::size_t i = 0; i < rep.locators.size() && !vals[t]; ++i)
                vals[t] = forney_values(curve, rep.locators[i], rep.evaluators[i], {pos[t]})[0];
        }
    }
    for (const auto& v : vals) {
        if (!v || v->is_zero()) {
            rep.status = DecodeStatus::evaluation_failure;
            return out;
        }
    }
    rep.positions = pos;
    for (std::size_t t = 0; t < pos.size(); ++t) {
        rep.values.push_back(*vals[t]);
        out.corrected[pos[t]] -= *vals[t];
    }
    if (!syndrome_array(curve, out.corrected, width, m).is_zero()) {
        rep.status = DecodeStatus::residual_nonzero;
        out.corrected = received;
    }
    return out;
}

}  // namespace keyeq::hermitian
