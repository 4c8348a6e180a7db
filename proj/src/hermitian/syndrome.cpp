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

#include "keyeq/hermitian/syndrome.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace keyeq::hermitian {

SyndromeArray::SyndromeArray(const HermitianCurve& curve, int width, std::optional<int> order_bound,
                             std::vector<std::vector<Elem>> rows)
    : curve_(&curve), width_(width), bound_(order_bound), rows_(std::move(rows))
{
    if (rows_.size() != static_cast<std::size_t>(curve.q()))
        throw std::invalid_argument("syndrome table needs q rows");
    for (const auto& r : rows_)
        if (r.size() != static_cast<std::size_t>(width))
            throw std::invalid_argument("syndrome rows must have the table width");
}

bool SyndromeArray::available(int a, int b) const
{
    if (b < 0 || b >= curve_->q())
        return false;
    if (a < 0)
        return true;
    if (a >= width_)
        return false;
    return !bound_ || curve_->order(a, b) <= *bound_;
}

std::optional<Elem> SyndromeArray::get(int a, int b) const
{
    if (!available(a, b))
        return std::nullopt;
    if (a < 0)
        return curve_->field().zero();
    return rows_[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
}

Elem SyndromeArray::at(int a, int b) const
{
    if (auto v = get(a, b))
        return *v;
    throw WindowExhausted("syndrome s_(" + std::to_string(a) + "," + std::to_string(b) + ") is not available");
}

bool SyndromeArray::is_zero() const
{
    for (int b = 0; b < curve_->q(); ++b)
        for (int a = 0; a < width_; ++a)
            if (available(a, b) && !rows_[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)].is_zero())
                return false;
    return true;
}

SyndromeArray syndrome_array(const HermitianCurve& curve, const std::vector<Elem>& v, int width,
                             std::optional<int> order_bound)
{
    if (v.size() != curve.n())
        throw std::invalid_argument("vector length " + std::to_string(v.size()) + ", expected " +
                                    std::to_string(curve.n()));
    if (width < 0)
        throw std::invalid_argument("negative syndrome width");
    const Field& F = curve.field();
    const int q = curve.q();
    std::vector<std::vector<Elem>> rows(static_cast<std::size_t>(q),
                                        std::vector<Elem>(static_cast<std::size_t>(width), F.zero()));
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero())
            continue;
        const Point& P = curve.point(k);
        Elem yb = v[k];
        for (int b = 0; b < q; ++b) {
            Elem term = yb;
            for (int a = 0; a < width; ++a) {
                rows[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] += term;
                term *= P.x;
            }
            yb *= P.y;
        }
    }
    return {curve, width, order_bound, std::move(rows)};
}

namespace {

// sum_c sum_i tf_(i,c) s_(i+a,c)
std::optional<Elem> pair_with(const CurvePoly& tf, int a, const SyndromeArray& s)
{
    Elem acc = tf.field().zero();
    for (int c = 0; c < tf.curve().q(); ++c) {
        const Poly& row = tf.row(c);
        for (int i = 0; i <= row.degree(); ++i) {
            const Elem t = row.coeff(i);
            if (t.is_zero() || i + a < 0)
                continue;
            auto sv = s.get(i + a, c);
            if (!sv)
                return std::nullopt;
            acc += t * *sv;
        }
    }
    return acc;
}

}  // namespace

std::optional<Elem> discrepancy(const CurvePoly& f, int r, int j, const SyndromeArray& s)
{
    if (&f.curve() != &s.curve())
        throw std::invalid_argument("polynomial and syndromes belong to different curves");
    return pair_with(f * CurvePoly::y_pow(f.curve(), j), r, s);
}

StarPoly fS_window(const CurvePoly& f, const SyndromeArray& s, int lo, int hi)
{
    if (hi < lo)
        throw std::invalid_argument("empty window");
    const HermitianCurve& C = f.curve();
    const Field& F = C.field();
    std::vector<LaurentTail> comps;
    for (int b = 0; b < C.q(); ++b) {
        const CurvePoly tf = f * CurvePoly::y_pow(C, b);
        const int deg = tf.max_x_degree();
        const int start = deg == kNegInf ? lo : std::min(lo, -deg);
        std::vector<Field::Value> raw;
        for (int a = start; a < hi; ++a) {
            auto t = pair_with(tf, a, s);
            if (!t)
                throw WindowExhausted("syndromes do not cover t_(" + std::to_string(a) + "," + std::to_string(b) + ")");
            raw.push_back(t->value());
        }
        comps.emplace_back(F, start, std::move(raw));
    }
    return {C, std::move(comps)};
}

}  // namespace keyeq::hermitian
