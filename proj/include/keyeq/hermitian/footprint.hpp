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

namespace keyeq::hermitian {

/**
 * Footprint of an error vector: the orders in the semigroup that are not
 * pole orders of functions vanishing on its support, together with the
 * smallest pole order sigma_i of such a function in each residue class i mod q.
 */
struct FootprintReport {
    std::vector<int> delta;  ///< ascending
    std::vector<int> sigma;  ///< sigma[i], i = 0 .. q-1
    int sigma_max = kNegInf;
    int delta_max = kNegInf;  ///< kNegInf for an empty footprint
    /// Monic locator of order sigma[i] per class.
    std::vector<CurvePoly> locators;
};

/// Brute-force footprint by elimination of monomial evaluation vectors on supp(e).
FootprintReport footprint_oracle(const HermitianCurve& curve, const std::vector<Elem>& e);

/// Footprint implied by one monic polynomial per class with the given orders:
/// class i contributes i(q+1), i(q+1) + q, ... below rho(f_i).
FootprintReport footprint_from_locators(const HermitianCurve& curve, const std::vector<CurvePoly>& f);

/// sigma_max + max(delta_max, q^2 - q - 1).
int termination_bound(const FootprintReport& report, int q);

}  // namespace keyeq::hermitian
