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

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace keyeq {

/// Thrown when two operands belong to different fields.
class FieldMismatch : public std::invalid_argument {
public:
    FieldMismatch() : std::invalid_argument("operands belong to different fields") {}
};

class Field;

/**
 * An element of a finite field, stored as its canonical index.
 *
 * The index of an element of GF(p^m) is the integer whose base-p digits are
 * its coordinates in the polynomial basis 1, a, a^2, ... (least significant
 * digit first). Elements refer to their field by pointer and must not outlive
 * it.
 */
class Elem {
public:
    Elem() = default;
    Elem(const Field& field, std::uint32_t value) : field_(&field), value_(value) {}

    const Field* field() const { return field_; }
    std::uint32_t value() const { return value_; }
    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }

    Elem inv() const;
    Elem pow(std::int64_t e) const;
    Elem operator-() const;

    Elem& operator+=(Elem rhs) { return *this = *this + rhs; }
    Elem& operator-=(Elem rhs) { return *this = *this - rhs; }
    Elem& operator*=(Elem rhs) { return *this = *this * rhs; }
    Elem& operator/=(Elem rhs) { return *this = *this / rhs; }

    friend Elem operator+(Elem a, Elem b);
    friend Elem operator-(Elem a, Elem b);
    friend Elem operator*(Elem a, Elem b);
    friend Elem operator/(Elem a, Elem b);
    friend bool operator==(Elem a, Elem b) { return a.field_ == b.field_ && a.value_ == b.value_; }

    std::string to_string() const;

private:
    const Field* field_ = nullptr;
    std::uint32_t value_ = 0;
};

std::ostream& operator<<(std::ostream& os, Elem a);

/**
 * GF(p^m) with full log/antilog and Zech-logarithm tables, p^m <= 2^16.
 *
 * When no modulus is given, the default is the first monic primitive
 * polynomial of degree m in Conway's ordering (coefficient of x^(m-i) taken
 * with sign (-1)^i, compared lexicographically from x^(m-1) down). This gives
 * a^2 = a + 1 for GF(9), x^4 + x + 1 for GF(16) and the primitive root 3 for
 * GF(7). The generator is always the class of x.
 */
class Field {
public:
    using Value = std::uint32_t;
    static constexpr int kNoLog = -1;

    /// `modulus` lists the coefficients of a monic degree-m polynomial in
    /// ascending order (length m + 1, last entry 1).
    static std::shared_ptr<const Field> make(unsigned p, unsigned m,
                                             std::optional<std::vector<unsigned>> modulus = std::nullopt);

    /// Field of the given order q = p^m with the default modulus.
    static std::shared_ptr<const Field> of_order(std::uint32_t q);

    unsigned characteristic() const { return p_; }
    unsigned degree() const { return m_; }
    std::uint32_t order() const { return q_; }
    const std::vector<unsigned>& modulus() const { return modulus_; }

    Elem zero() const { return {*this, 0}; }
    Elem one() const { return {*this, 1}; }
    Elem generator() const { return exp(1); }
    Elem element(Value v) const;
    /// Image of an integer under Z -> GF(p).
    Elem from_int(long long v) const;
    /// g^k for any integer k.
    Elem exp(std::int64_t k) const { return {*this, exp_[mod_exponent(k)]}; }
    /// Discrete log in [0, q-1); throws std::domain_error on zero.
    int log(Elem a) const;

    std::vector<Elem> elements() const;

    // Arithmetic on raw canonical values; callers guarantee the values belong
    // to this field.
    Value add(Value a, Value b) const;
    Value sub(Value a, Value b) const { return add(a, neg(b)); }
    Value neg(Value a) const { return a == 0 ? 0 : mul(a, minus_one_); }
    Value mul(Value a, Value b) const
    {
        if (a == 0 || b == 0)
            return 0;
        return exp_[log_[a] + log_[b]];
    }
    Value inv(Value a) const;
    Value div(Value a, Value b) const { return mul(a, inv(b)); }
    Value pow(Value a, std::int64_t e) const;

    /// "0", "1", "a" or "a^k" with k the discrete log.
    std::string format(Elem a) const;
    /// Accepts the format() forms and decimal integers (mapped through GF(p)).
    Elem parse(std::string_view text) const;

    /// For GF(Q^2) with Q = p^(m/2): (a^(Q+1), a^Q + a). Both lie in GF(Q).
    std::pair<Elem, Elem> norm_trace(Elem a) const;
    /// Order Q of the index-2 subfield; throws std::invalid_argument for odd m.
    std::uint32_t subfield_order() const;
    bool in_subfield(Elem a) const;

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

private:
    Field(unsigned p, unsigned m, std::vector<unsigned> modulus);

    std::uint32_t mod_exponent(std::int64_t k) const
    {
        auto r = k % static_cast<std::int64_t>(q_ - 1);
        return static_cast<std::uint32_t>(r < 0 ? r + (q_ - 1) : r);
    }

    unsigned p_;
    unsigned m_;
    std::uint32_t q_;
    std::vector<unsigned> modulus_;
    std::vector<Value> exp_;  // doubled length so exp_[log a + log b] needs no reduction
    std::vector<int> log_;
    std::vector<int> zech_;   // log(1 + g^k), kNoLog when 1 + g^k == 0
    Value minus_one_;
};

bool is_prime(unsigned n);

/// Irreducibility of a monic polynomial over GF(p) (ascending coefficients).
bool is_irreducible(unsigned p, const std::vector<unsigned>& poly);

/// Whether x generates the multiplicative group of GF(p)[x]/(poly).
bool is_primitive(unsigned p, const std::vector<unsigned>& poly);

std::vector<unsigned> default_modulus(unsigned p, unsigned m);

}  // namespace keyeq
