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

#include "keyeq/poly.hpp"

#include <algorithm>
#include <ostream>

#include "keyeq/detail/terms.hpp"

namespace keyeq {

Poly::Poly(const Field& field, const std::vector<Elem>& coeffs) : field_(&field)
{
    c_.reserve(coeffs.size());
    for (Elem e : coeffs) {
        if (e.field() != field_)
            throw FieldMismatch();
        c_.push_back(e.value());
    }
    normalize();
}

Poly::Poly(const Field& field, std::vector<Field::Value> raw) : field_(&field), c_(std::move(raw))
{
    normalize();
}

Poly Poly::constant(Elem c)
{
    return monomial(c, 0);
}

Poly Poly::monomial(Elem c, int degree)
{
    if (c.field() == nullptr)
        throw std::invalid_argument("element has no field");
    if (degree < 0)
        throw std::invalid_argument("negative monomial degree");
    Poly f(*c.field());
    if (!c.is_zero()) {
        f.c_.assign(static_cast<std::size_t>(degree) + 1, 0);
        f.c_.back() = c.value();
    }
    return f;
}

void Poly::normalize()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

void Poly::check_same(const Poly& other) const
{
    if (field_ != other.field_)
        throw FieldMismatch();
}

Elem Poly::coeff(int i) const
{
    if (i < 0 || i >= static_cast<int>(c_.size()))
        return field_->zero();
    return {*field_, c_[static_cast<std::size_t>(i)]};
}

Elem Poly::lead() const
{
    return c_.empty() ? field_->zero() : Elem(*field_, c_.back());
}

Elem Poly::eval(Elem a) const
{
    if (a.field() != field_)
        throw FieldMismatch();
    Field::Value acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;)
        acc = field_->add(field_->mul(acc, a.value()), c_[i]);
    return {*field_, acc};
}

Poly Poly::derivative() const
{
    std::vector<Field::Value> d;
    if (c_.size() > 1) {
        d.resize(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            d[i - 1] = field_->mul(field_->from_int(static_cast<long long>(i)).value(), c_[i]);
    }
    return {*field_, std::move(d)};
}

Poly Poly::shifted(int k) const
{
    if (k < 0)
        throw std::invalid_argument("negative shift");
    if (c_.empty() || k == 0)
        return *this;
    std::vector<Field::Value> d(c_.size() + static_cast<std::size_t>(k), 0);
    std::copy(c_.begin(), c_.end(), d.begin() + k);
    return {*field_, std::move(d)};
}

Poly Poly::scaled(Elem c) const
{
    if (c.field() != field_)
        throw FieldMismatch();
    std::vector<Field::Value> d(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i)
        d[i] = field_->mul(c.value(), c_[i]);
    return {*field_, std::move(d)};
}

Poly Poly::monic() const
{
    if (c_.empty())
        return *this;
    return scaled(lead().inv());
}

Poly& Poly::operator+=(const Poly& rhs)
{
    check_same(rhs);
    if (rhs.c_.size() > c_.size())
        c_.resize(rhs.c_.size(), 0);
    for (std::size_t i = 0; i < rhs.c_.size(); ++i)
        c_[i] = field_->add(c_[i], rhs.c_[i]);
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs)
{
    check_same(rhs);
    if (rhs.c_.size() > c_.size())
        c_.resize(rhs.c_.size(), 0);
    for (std::size_t i = 0; i < rhs.c_.size(); ++i)
        c_[i] = field_->sub(c_[i], rhs.c_[i]);
    normalize();
    return *this;
}

Poly Poly::operator-() const
{
    std::vector<Field::Value> d(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i)
        d[i] = field_->neg(c_[i]);
    return {*field_, std::move(d)};
}

Poly operator*(const Poly& a, const Poly& b)
{
    a.check_same(b);
    if (a.c_.empty() || b.c_.empty())
        return Poly(*a.field_);
    const Field& f = *a.field_;
    std::vector<Field::Value> d(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            d[i + j] = f.add(d[i + j], f.mul(a.c_[i], b.c_[j]));
    }
    return {f, std::move(d)};
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const
{
    check_same(divisor);
    if (divisor.is_zero())
        throw std::domain_error("polynomial division by zero");
    const Field& f = *field_;
    const int db = divisor.degree();
    if (degree() < db)
        return {Poly(f), *this};
    std::vector<Field::Value> rem = c_;
    const Field::Value lead_inv = f.inv(divisor.c_.back());
    std::vector<Field::Value> quo(static_cast<std::size_t>(degree() - db) + 1, 0);
    for (int k = degree() - db; k >= 0; --k) {
        const Field::Value c = f.mul(rem[static_cast<std::size_t>(k + db)], lead_inv);
        quo[static_cast<std::size_t>(k)] = c;
        if (c == 0)
            continue;
        for (int i = 0; i <= db; ++i) {
            auto& r = rem[static_cast<std::size_t>(k + i)];
            r = f.sub(r, f.mul(c, divisor.c_[static_cast<std::size_t>(i)]));
        }
    }
    return {Poly(f, std::move(quo)), Poly(f, std::move(rem))};
}

std::string Poly::to_string() const
{
    if (c_.empty())
        return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0)
            continue;
        if (!out.empty())
            out += " + ";
        out += detail::format_term(Elem(*field_, c_[i]), detail::format_power('x', static_cast<int>(i)));
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& f)
{
    return os << f.to_string();
}

Poly Poly::parse(const Field& field, std::string_view text)
{
    Poly f(field);
    for (const auto& t : detail::parse_terms(field, text)) {
        if (t.y_exp != 0)
            throw std::invalid_argument("univariate polynomial contains y: '" + std::string(text) + "'");
        f += monomial(t.coeff, t.x_exp);
    }
    return f;
}

LaurentTail::LaurentTail(const Field& field, int begin, std::vector<Field::Value> coeffs)
    : field_(&field), begin_(begin), c_(std::move(coeffs))
{
}

LaurentTail LaurentTail::from_sequence(const Field& field, const std::vector<Elem>& values)
{
    std::vector<Field::Value> raw;
    raw.reserve(values.size());
    for (Elem e : values) {
        if (e.field() != &field)
            throw FieldMismatch();
        raw.push_back(e.value());
    }
    return {field, 0, std::move(raw)};
}

LaurentTail LaurentTail::from_poly(const Poly& f, int end)
{
    // x^d sits at index a = -d-1.
    const int begin = f.is_zero() ? std::min(end, 0) : std::min(end, -f.degree() - 1);
    std::vector<Field::Value> raw(static_cast<std::size_t>(end - begin), 0);
    for (int a = begin; a < end; ++a)
        raw[static_cast<std::size_t>(a - begin)] = f.coeff(-a - 1).value();
    return {f.field(), begin, std::move(raw)};
}

Elem LaurentTail::coeff(int a) const
{
    if (a < begin_)
        return field_->zero();
    if (a >= end())
        throw std::out_of_range("coefficient " + std::to_string(a) + " outside known window");
    return {*field_, c_[static_cast<std::size_t>(a - begin_)]};
}

std::optional<std::pair<int, Elem>> LaurentTail::leading() const
{
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0)
            return std::pair{begin_ + static_cast<int>(i), Elem(*field_, c_[i])};
    return std::nullopt;
}

std::optional<int> LaurentTail::degree() const
{
    if (auto lt = leading())
        return -lt->first - 1;
    return std::nullopt;
}

bool LaurentTail::zero_on(int lo, int hi) const
{
    if (hi > end())
        throw std::out_of_range("window [" + std::to_string(lo) + ", " + std::to_string(hi) +
                                ") exceeds known coefficients");
    for (int a = std::max(lo, begin_); a < hi; ++a)
        if (c_[static_cast<std::size_t>(a - begin_)] != 0)
            return false;
    return true;
}

LaurentTail operator-(const LaurentTail& a, const LaurentTail& b)
{
    if (a.field_ != b.field_)
        throw FieldMismatch();
    const int lo = std::min(a.begin_, b.begin_);
    const int hi = std::min(a.end(), b.end());
    std::vector<Field::Value> d(static_cast<std::size_t>(std::max(hi - lo, 0)), 0);
    for (int k = lo; k < hi; ++k)
        d[static_cast<std::size_t>(k - lo)] = a.field_->sub(a.coeff(k).value(), b.coeff(k).value());
    return {*a.field_, lo, std::move(d)};
}

bool operator==(const LaurentTail& a, const LaurentTail& b)
{
    if (a.field_ != b.field_ || a.end() != b.end())
        return false;
    const int lo = std::min(a.begin_, b.begin_);
    for (int k = lo; k < a.end(); ++k)
        if (a.coeff(k) != b.coeff(k))
            return false;
    return true;
}

LaurentTail laurent_mul(const Poly& f, const LaurentTail& t, int lo, int hi)
{
    if (&f.field() != &t.field())
        throw FieldMismatch();
    if (hi < lo)
        throw std::invalid_argument("empty window");
    const int df = f.is_zero() ? 0 : f.degree();
    if (hi + df > t.end())
        throw WindowExhausted("product window [" + std::to_string(lo) + ", " + std::to_string(hi) +
                              ") needs coefficients up to " + std::to_string(hi + df - 1) + ", known below " +
                              std::to_string(t.end()));
    const Field& field = f.field();
    // Start no later than the first possibly nonzero coefficient so the result
    // keeps the "zero below begin" meaning.
    const int start = std::min(lo, t.begin() - df);
    std::vector<Field::Value> out(static_cast<std::size_t>(hi - start), 0);
    for (int a = start; a < hi; ++a) {
        Field::Value acc = 0;
        for (int i = 0; i <= f.degree(); ++i) {
            const Field::Value fi = f.raw()[static_cast<std::size_t>(i)];
            if (fi != 0)
                acc = field.add(acc, field.mul(fi, t.coeff(a + i).value()));
        }
        out[static_cast<std::size_t>(a - start)] = acc;
    }
    return {field, start, std::move(out)};
}

EuclidStep euclid_monic_step(const Poly& a, const Poly& b)
{
    auto [quo, rem] = a.divmod(b);
    if (rem.is_zero())
        return {std::move(quo), std::move(rem), a.field().one()};
    const Elem scale = rem.lead();
    return {std::move(quo), rem.monic(), scale};
}

}  // namespace keyeq
