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
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "keyeq/galois.hpp"

namespace keyeq {

/// Degree of the zero polynomial (and order of the zero function).
inline constexpr int kNegInf = std::numeric_limits<int>::min();

/// Univariate polynomial over a finite field, coefficients in ascending degree.
class Poly {
public:
    explicit Poly(const Field& field) : field_(&field) {}
    Poly(const Field& field, const std::vector<Elem>& coeffs);
    Poly(const Field& field, std::vector<Field::Value> raw);

    static Poly constant(Elem c);
    static Poly monomial(Elem c, int degree);
    static Poly x(const Field& field) { return monomial(field.one(), 1); }

    const Field& field() const { return *field_; }
    /// kNegInf for the zero polynomial.
    int degree() const { return c_.empty() ? kNegInf : static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    /// Zero outside [0, degree].
    Elem coeff(int i) const;
    Elem lead() const;
    const std::vector<Field::Value>& raw() const { return c_; }

    Elem operator()(Elem a) const { return eval(a); }
    Elem eval(Elem a) const;
    Poly derivative() const;
    Poly shifted(int k) const;  ///< x^k * f, k >= 0
    Poly scaled(Elem c) const;
    Poly monic() const;

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs) { return *this = *this * rhs; }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Elem c, const Poly& f) { return f.scaled(c); }
    Poly operator-() const;
    friend bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

    /// Quotient and remainder; throws std::domain_error for a zero divisor.
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;

    /// Terms in decreasing degree, e.g. "x^2 + x + a^7"; "0" for zero.
    std::string to_string() const;
    static Poly parse(const Field& field, std::string_view text);

private:
    void normalize();
    void check_same(const Poly& other) const;

    const Field* field_;
    std::vector<Field::Value> c_;
};

std::ostream& operator<<(std::ostream& os, const Poly& f);

/**
 * A window of a Laurent series in 1/x, h = (1/x) * sum_a h_a x^(-a).
 *
 * Coefficients h_a are known for a in [begin, end). Every h_a with a < begin
 * is zero (the series has degree at most -begin-1); coefficients with a >= end
 * are unknown. Index a carries the term x^(-a-1), so negative a are the
 * polynomial part.
 */
class LaurentTail {
public:
    LaurentTail(const Field& field, int begin, std::vector<Field::Value> coeffs);

    /// Series of a known sequence: h_a = values[a] for a in [0, values.size()).
    static LaurentTail from_sequence(const Field& field, const std::vector<Elem>& values);
    /// A polynomial viewed as a Laurent series, known on [-deg-1, end).
    static LaurentTail from_poly(const Poly& f, int end);

    const Field& field() const { return *field_; }
    int begin() const { return begin_; }
    int end() const { return begin_ + static_cast<int>(c_.size()); }
    /// Highest degree the window can represent.
    int max_degree() const { return -begin_ - 1; }
    /// h_a; zero for a < begin, throws std::out_of_range for a >= end.
    Elem coeff(int a) const;

    /// First nonzero coefficient in the window as (a, h_a).
    std::optional<std::pair<int, Elem>> leading() const;
    /// Degree (= -a-1 of the leading term) if some coefficient in the window is nonzero.
    std::optional<int> degree() const;
    /// Whether h_a = 0 for every a in [lo, hi) (clipped to the known window from above is an error).
    bool zero_on(int lo, int hi) const;

    /// Coefficient-wise difference on the common known window.
    friend LaurentTail operator-(const LaurentTail& a, const LaurentTail& b);
    friend bool operator==(const LaurentTail& a, const LaurentTail& b);

private:
    const Field* field_;
    int begin_;
    std::vector<Field::Value> c_;
};

/// Thrown when a requested coefficient window cannot be derived from the data held.
class WindowExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * f * t on the window a in [lo, hi), extended downward to the first index
 * that can be nonzero so the result keeps LaurentTail's meaning.
 *
 * (f t)_a = sum_i f_i t_(a+i); this needs hi + deg f <= t.end() and throws
 * WindowExhausted otherwise.
 */
LaurentTail laurent_mul(const Poly& f, const LaurentTail& t, int lo, int hi);

struct EuclidStep {
    Poly quotient;
    Poly remainder;  ///< monic or zero
    Elem scale;      ///< A = quotient * B + scale * remainder
};

/// One division of the monic-remainder Euclidean algorithm.
EuclidStep euclid_monic_step(const Poly& a, const Poly& b);

}  // namespace keyeq
