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

#include <optional>
#include <vector>

#include "keyeq/hermitian/curve_poly.hpp"
#include "keyeq/hermitian/star.hpp"

namespace keyeq::hermitian {

/**
 * Table of s_(a,b) = sum_k v_k a_k^a b_k^b for 0 <= b < q and 0 <= a < width.
 * Entries with a < 0 are zero. With an order bound m, only entries with
 * aq + b(q+1) <= m count as known (the ones a received word reveals for
 * the code with check rows up to order m).
 */
class SyndromeArray {
public:
    SyndromeArray(const HermitianCurve& curve, int width, std::optional<int> order_bound,
                  std::vector<std::vector<Elem>> rows);

    const HermitianCurve& curve() const { return *curve_; }
    int width() const { return width_; }
    const std::optional<int>& order_bound() const { return bound_; }

    bool available(int a, int b) const;
    /// Zero for a < 0, nullopt when unknown.
    std::optional<Elem> get(int a, int b) const;
    /// As get(), throwing WindowExhausted when unknown.
    Elem at(int a, int b) const;
    bool is_zero() const;

private:
    const HermitianCurve* curve_;
    int width_;
    std::optional<int> bound_;
    std::vector<std::vector<Elem>> rows_;  // rows_[b][a]
};

SyndromeArray syndrome_array(const HermitianCurve& curve, const std::vector<Elem>& v, int width,
                             std::optional<int> order_bound = std::nullopt);

/// sum_c sum_i (y^j f)_(i,c) s_(i+r,c), the coefficient of x^(-r-1) zeta*_j in fS; nullopt if unknown.
std::optional<Elem> discrepancy(const CurvePoly& f, int r, int j, const SyndromeArray& s);

/// Coefficients t_(a,b) of fS for a in [lo, hi), extended down to the first
/// index that can be nonzero. Throws WindowExhausted when a needed syndrome is unknown.
StarPoly fS_window(const CurvePoly& f, const SyndromeArray& s, int lo, int hi);

}  // namespace keyeq::hermitian
