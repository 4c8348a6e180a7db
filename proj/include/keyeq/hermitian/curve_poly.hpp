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

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "keyeq/hermitian/curve.hpp"
#include "keyeq/poly.hpp"

namespace keyeq::hermitian {

/**
 * Element of GF(q^2)[x, y] / (y^q + y - x^(q+1)), kept as
 * f = sum_(b < q) f_b(x) y^b.
 */
class CurvePoly {
public:
    explicit CurvePoly(const HermitianCurve& curve);

    static CurvePoly constant(const HermitianCurve& curve, Elem c);
    /// c x^a y^b for any b >= 0 (reduced).
    static CurvePoly monomial(const HermitianCurve& curve, Elem c, int a, int b);
    static CurvePoly y_pow(const HermitianCurve& curve, int b) { return monomial(curve, curve.field().one(), 0, b); }

    const HermitianCurve& curve() const { return *curve_; }
    const Field& field() const { return curve_->field(); }

    /// Coefficient polynomial of y^b.
    const Poly& row(int b) const { return rows_.at(static_cast<std::size_t>(b)); }
    Elem coeff(int a, int b) const { return row(b).coeff(a); }
    void set_row(int b, Poly p);

    bool is_zero() const;
    /// Pole order; kNegInf for zero.
    int rho() const;
    /// Exponents (a, b) of the term of largest order; requires nonzero.
    std::pair<int, int> lead_monomial() const;
    Elem lead_coeff() const;
    bool is_monic() const { return !is_zero() && lead_coeff().is_one(); }
    /// Largest x-degree over all rows; kNegInf for zero.
    int max_x_degree() const;

    Elem eval(const Point& p) const;
    Elem operator()(const Point& p) const { return eval(p); }
    /// df/dx + x^q df/dy, using dy/dx = x^q on the curve.
    CurvePoly derivative() const;

    CurvePoly shifted_x(int k) const;  ///< x^k f, k >= 0
    CurvePoly scaled(Elem c) const;

    CurvePoly& operator+=(const CurvePoly& rhs);
    CurvePoly& operator-=(const CurvePoly& rhs);
    friend CurvePoly operator+(CurvePoly a, const CurvePoly& b) { return a += b; }
    friend CurvePoly operator-(CurvePoly a, const CurvePoly& b) { return a -= b; }
    friend CurvePoly operator*(const CurvePoly& a, const CurvePoly& b);
    friend CurvePoly operator*(Elem c, const CurvePoly& f) { return f.scaled(c); }
    CurvePoly operator-() const;
    friend bool operator==(const CurvePoly& a, const CurvePoly& b);

    /// Terms in decreasing order, e.g. "x^4 + a^4 y"; "0" for zero.
    std::string to_string() const;
    static CurvePoly parse(const HermitianCurve& curve, std::string_view text);

private:
    void check_same(const CurvePoly& other) const;

    const HermitianCurve* curve_;
    std::vector<Poly> rows_;
};

std::ostream& operator<<(std::ostream& os, const CurvePoly& f);

inline int rho(const CurvePoly& f)
{
    return f.rho();
}

inline CurvePoly curve_mul(const CurvePoly& f, const CurvePoly& g)
{
    return f * g;
}

inline CurvePoly curve_derivative(const CurvePoly& f)
{
    return f.derivative();
}

}  // namespace keyeq::hermitian
