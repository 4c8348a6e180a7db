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

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "keyeq/galois.hpp"

namespace keyeq::hermitian {

struct Point {
    Elem x;
    Elem y;
};

/**
 * The Hermitian curve X^(q+1) = Y^q + Y over GF(q^2) and its q^3 affine points.
 *
 * Points are grouped by x in increasing discrete log with x = 0 last; within
 * a group, y follows the same rule. The pole order of x^a y^b at the point at
 * infinity is aq + b(q+1).
 */
class HermitianCurve {
public:
    /// q in {2, 3, 4, 5, 7, 8}; the field is GF(q^2) with its default modulus.
    static std::shared_ptr<const HermitianCurve> build(int q);

    const Field& field() const { return *field_; }
    const std::shared_ptr<const Field>& field_ptr() const { return field_; }
    int q() const { return q_; }
    std::size_t n() const { return points_.size(); }
    const std::vector<Point>& points() const { return points_; }
    const Point& point(std::size_t k) const { return points_.at(k); }

    int genus() const { return q_ * (q_ - 1) / 2; }
    int order(int a, int b) const { return a * q_ + b * (q_ + 1); }
    bool in_semigroup(int m) const;
    /// (a, b) with b < q and aq + b(q+1) = m, for m in the semigroup.
    std::optional<std::pair<int, int>> monomial_of_order(int m) const;
    /// Semigroup elements <= bound, ascending.
    std::vector<int> semigroup_up_to(int bound) const;
    /// Smallest semigroup element congruent to i mod q, i.e. i(q+1).
    int min_in_class(int i) const { return i * (q_ + 1); }

    HermitianCurve(const HermitianCurve&) = delete;
    HermitianCurve& operator=(const HermitianCurve&) = delete;

private:
    HermitianCurve(std::shared_ptr<const Field> field, int q);

    std::shared_ptr<const Field> field_;
    int q_;
    std::vector<Point> points_;
};

inline std::shared_ptr<const HermitianCurve> build_curve(int q)
{
    return HermitianCurve::build(q);
}

}  // namespace keyeq::hermitian
