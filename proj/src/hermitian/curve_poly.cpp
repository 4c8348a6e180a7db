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

#include "keyeq/hermitian/curve_poly.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "keyeq/detail/terms.hpp"

namespace keyeq::hermitian {

CurvePoly::CurvePoly(const HermitianCurve& curve)
    : curve_(&curve), rows_(static_cast<std::size_t>(curve.q()), Poly(curve.field()))
{
}

CurvePoly CurvePoly::constant(const HermitianCurve& curve, Elem c)
{
    return monomial(curve, c, 0, 0);
}

CurvePoly CurvePoly::monomial(const HermitianCurve& curve, Elem c, int a, int b)
{
    if (a < 0 || b < 0)
        throw std::invalid_argument("negative monomial exponent");
    const int q = curve.q();
    CurvePoly f(curve);
    if (b < q) {
        f.rows_[static_cast<std::size_t>(b)] = Poly::monomial(c, a);
        return f;
    }
    // y^b = y^(b-q) (x^(q+1) - y)
    CurvePoly rest = monomial(curve, c, a, b - q);
    const Elem one = curve.field().one();
    CurvePoly red = monomial(curve, one, q + 1, 0) - monomial(curve, one, 0, 1);
    return rest * red;
}

void CurvePoly::set_row(int b, Poly p)
{
    if (&p.field() != &field())
        throw FieldMismatch();
    rows_.at(static_cast<std::size_t>(b)) = std::move(p);
}

void CurvePoly::check_same(const CurvePoly& other) const
{
    if (curve_ != other.curve_)
        throw std::invalid_argument("curve polynomials belong to different curves");
}

bool CurvePoly::is_zero() const
{
    return std::all_of(rows_.begin(), rows_.end(), [](const Poly& p) { return p.is_zero(); });
}

int CurvePoly::rho() const
{
    int best = kNegInf;
    for (int b = 0; b < curve_->q(); ++b) {
        const Poly& p = rows_[static_cast<std::size_t>(b)];
        if (!p.is_zero())
            best = std::max(best, curve_->order(p.degree(), b));
    }
    return best;
}

std::pair<int, int> CurvePoly::lead_monomial() const
{
    const int r = rho();
    if (r == kNegInf)
        throw std::domain_error("zero curve polynomial has no leading term");
    return *curve_->monomial_of_order(r);
}

Elem CurvePoly::lead_coeff() const
{
    if (is_zero())
        return field().zero();
    auto [a, b] = lead_monomial();
    return coeff(a, b);
}

int CurvePoly::max_x_degree() const
{
    int best = kNegInf;
    for (const Poly& p : rows_)
        best = std::max(best, p.degree());
    return best;
}

Elem CurvePoly::eval(const Point& p) const
{
    Elem acc = field().zero();
    for (int b = curve_->q(); b-- > 0;)
        acc = acc * p.y + rows_[static_cast<std::size_t>(b)](p.x);
    return acc;
}

CurvePoly CurvePoly::derivative() const
{
    const int q = curve_->q();
    const Field& F = field();
    CurvePoly d(*curve_);
    for (int b = 0; b < q; ++b)
        d.rows_[static_cast<std::size_t>(b)] = rows_[static_cast<std::size_t>(b)].derivative();
    for (int b = 1; b < q; ++b) {
        const Poly dy = F.from_int(b) * rows_[static_cast<std::size_t>(b)].shifted(q);
        d.rows_[static_cast<std::size_t>(b - 1)] += dy;
    }
    return d;
}

CurvePoly CurvePoly::shifted_x(int k) const
{
    CurvePoly out(*curve_);
    for (std::size_t b = 0; b < rows_.size(); ++b)
        out.rows_[b] = rows_[b].shifted(k);
    return out;
}

CurvePoly CurvePoly::scaled(Elem c) const
{
    CurvePoly out(*curve_);
    for (std::size_t b = 0; b < rows_.size(); ++b)
        out.rows_[b] = rows_[b].scaled(c);
    return out;
}

CurvePoly& CurvePoly::operator+=(const CurvePoly& rhs)
{
    check_same(rhs);
    for (std::size_t b = 0; b < rows_.size(); ++b)
        rows_[b] += rhs.rows_[b];
    return *this;
}

CurvePoly& CurvePoly::operator-=(const CurvePoly& rhs)
{
    check_same(rhs);
    for (std::size_t b = 0; b < rows_.size(); ++b)
        rows_[b] -= rhs.rows_[b];
    return *this;
}

CurvePoly CurvePoly::operator-() const
{
    CurvePoly out(*curve_);
    for (std::size_t b = 0; b < rows_.size(); ++b)
        out.rows_[b] = -rows_[b];
    return out;
}

CurvePoly operator*(const CurvePoly& a, const CurvePoly& b)
{
    a.check_same(b);
    const int q = a.curve_->q();
    const Field& F = a.field();
    // Unreduced product has y-degree up to 2q - 2.
    std::vector<Poly> wide(static_cast<std::size_t>(2 * q - 1), Poly(F));
    for (int i = 0; i < q; ++i) {
        const Poly& ai = a.rows_[static_cast<std::size_t>(i)];
        if (ai.is_zero())
            continue;
        for (int j = 0; j < q; ++j) {
            const Poly& bj = b.rows_[static_cast<std::size_t>(j)];
            if (!bj.is_zero())
                wide[static_cast<std::size_t>(i + j)] += ai * bj;
        }
    }
    // y^(q+k) = x^(q+1) y^k - y^(k+1); reduce from the top so k+1 < q holds.
    for (int b = 2 * q - 2; b >= q; --b) {
        Poly top = std::move(wide[static_cast<std::size_t>(b)]);
        wide[static_cast<std::size_t>(b)] = Poly(F);
        if (top.is_zero())
            continue;
        wide[static_cast<std::size_t>(b - q)] += top.shifted(q + 1);
        wide[static_cast<std::size_t>(b - q + 1)] -= top;
    }
    CurvePoly out(*a.curve_);
    for (int b = 0; b < q; ++b)
        out.rows_[static_cast<std::size_t>(b)] = std::move(wide[static_cast<std::size_t>(b)]);
    return out;
}

bool operator==(const CurvePoly& a, const CurvePoly& b)
{
    return a.curve_ == b.curve_ && a.rows_ == b.rows_;
}

std::string CurvePoly::to_string() const
{
    const int r = rho();
    if (r == kNegInf)
        return "0";
    std::string out;
    for (int m = r; m >= 0; --m) {
        auto mono = curve_->monomial_of_order(m);
        if (!mono)
            continue;
        auto [a, b] = *mono;
        const Elem c = coeff(a, b);
        if (c.is_zero())
            continue;
        std::string name = detail::format_power('x', a);
        const std::string yp = detail::format_power('y', b);
        if (name.empty())
            name = yp;
        else if (!yp.empty())
            name += " " + yp;
        if (!out.empty())
            out += " + ";
        out += detail::format_term(c, name);
    }
    return out;
}

CurvePoly CurvePoly::parse(const HermitianCurve& curve, std::string_view text)
{
    CurvePoly f(curve);
    for (const auto& t : detail::parse_terms(curve.field(), text))
        f += monomial(curve, t.coeff, t.x_exp, t.y_exp);
    return f;
}

std::ostream& operator<<(std::ostream& os, const CurvePoly& f)
{
    return os << f.to_string();
}

}  // namespace keyeq::hermitian
