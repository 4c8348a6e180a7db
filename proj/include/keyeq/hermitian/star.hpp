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

#include <vector>

#include "keyeq/hermitian/curve_poly.hpp"
#include "keyeq/poly.hpp"

namespace keyeq::hermitian {

/**
 * Expansion (1/x) sum_b t_b zeta*_b over the *-basis, zeta*_0 = y^(q-1) + 1
 * and zeta*_b = y^(q-1-b) for b > 0. Component b is the tail
 * t_b = sum_a t_(a,b) x^(-a), so t_(a,b) multiplies x^(-a-1) zeta*_b.
 */
class StarPoly {
public:
    StarPoly(const HermitianCurve& curve, std::vector<LaurentTail> components);

    const HermitianCurve& curve() const { return *curve_; }
    const LaurentTail& component(int b) const { return comps_.at(static_cast<std::size_t>(b)); }
    Elem coeff(int a, int b) const { return component(b).coeff(a); }
    /// Smallest end() over the components.
    int end() const;

    /// Order of x^(-a-1) zeta*_b: q^2 - q - 1 - (aq + b(q+1)).
    static int term_order(int q, int a, int b) { return q * q - q - 1 - (a * q + b * (q + 1)); }

    friend StarPoly operator-(const StarPoly& a, const StarPoly& b);

private:
    const HermitianCurve* curve_;
    std::vector<LaurentTail> comps_;
};

/// *-basis form of a polynomial, with every component known on [.., end).
StarPoly to_star(const CurvePoly& f, int end);
/// Inverse of to_star; throws std::invalid_argument when a coefficient with a >= 0 is nonzero.
CurvePoly from_star(const StarPoly& s);

struct StarTerm {
    int sign;   ///< +1 or -1
    int x_exp;  ///< power of x
    int index;  ///< zeta*_index
};

/// y^b zeta*_c as a signed sum of x^k zeta*_d terms, for 0 <= b, c < q.
std::vector<StarTerm> star_mul_table(int b, int c, int q);

}  // namespace keyeq::hermitian
