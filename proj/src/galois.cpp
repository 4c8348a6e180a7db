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

#include "keyeq/galois.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <ostream>

namespace keyeq {

namespace {

constexpr std::uint32_t kMaxOrder = 1u << 16;

const Field& common_field(Elem a, Elem b)
{
    if (a.field() == nullptr || a.field() != b.field())
        throw FieldMismatch();
    return *a.field();
}

const Field& field_of(Elem a)
{
    if (a.field() == nullptr)
        throw std::invalid_argument("element has no field");
    return *a.field();
}

// Polynomials over GF(p), ascending coefficients, used only while building tables.
using PrimePoly = std::vector<unsigned>;

void trim(PrimePoly& f)
{
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

unsigned inv_mod(unsigned a, unsigned p)
{
    unsigned r = 1;
    for (unsigned e = p - 2, b = a % p; e; e >>= 1, b = b * b % p)
        if (e & 1)
            r = r * b % p;
    return r;
}

// Remainder of f modulo a nonzero g.
PrimePoly prime_mod(PrimePoly f, const PrimePoly& g, unsigned p)
{
    trim(f);
    const std::size_t dg = g.size() - 1;
    const unsigned lead_inv = inv_mod(g.back(), p);
    while (f.size() > dg && !f.empty()) {
        const unsigned c = f.back() * lead_inv % p;
        const std::size_t shift = f.size() - 1 - dg;
        for (std::size_t i = 0; i <= dg; ++i)
            f[shift + i] = (f[shift + i] + p * p - c * g[i] % p) % p;
        trim(f);
    }
    return f;
}

std::uint32_t ipow(unsigned base, unsigned e)
{
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        r *= base;
        if (r > kMaxOrder)
            return kMaxOrder + 1;
    }
    return static_cast<std::uint32_t>(r);
}

// Multiply the digit vector `v` (an element of GF(p)[x]/(modulus)) by x.
void times_x(std::vector<unsigned>& v, const std::vector<unsigned>& modulus, unsigned p)
{
    const std::size_t m = v.size();
    const unsigned top = v[m - 1];
    for (std::size_t i = m - 1; i > 0; --i)
        v[i] = v[i - 1];
    v[0] = 0;
    // x^m = -(c_0 + c_1 x + ... + c_{m-1} x^{m-1})
    for (std::size_t i = 0; i < m; ++i)
        v[i] = (v[i] + top * (p - modulus[i] % p)) % p;
}

std::uint32_t encode_digits(const std::vector<unsigned>& v, unsigned p)
{
    std::uint32_t r = 0;
    for (std::size_t i = v.size(); i-- > 0;)
        r = r * p + v[i];
    return r;
}

void check_modulus_shape(unsigned p, unsigned m, const std::vector<unsigned>& modulus)
{
    if (modulus.size() != m + 1 || modulus.back() != 1)
        throw std::invalid_argument("modulus must be monic of degree " + std::to_string(m));
    for (unsigned c : modulus)
        if (c >= p)
            throw std::invalid_argument("modulus coefficient out of range for GF(" + std::to_string(p) + ")");
}

}  // namespace

bool is_prime(unsigned n)
{
    if (n < 2)
        return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

bool is_irreducible(unsigned p, const std::vector<unsigned>& poly)
{
    PrimePoly f = poly;
    trim(f);
    if (f.size() < 2)
        return false;
    const std::size_t deg = f.size() - 1;
    // Trial division by every monic polynomial of degree 1..deg/2.
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        const std::uint32_t count = ipow(p, static_cast<unsigned>(d));
        for (std::uint32_t idx = 0; idx < count; ++idx) {
            PrimePoly g(d + 1, 0);
            std::uint32_t rest = idx;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = rest % p;
                rest /= p;
            }
            g[d] = 1;
            if (prime_mod(f, g, p).empty())
                return false;
        }
    }
    return true;
}

bool is_primitive(unsigned p, const std::vector<unsigned>& poly)
{
    const unsigned m = static_cast<unsigned>(poly.size() - 1);
    const std::uint32_t q = ipow(p, m);
    if (poly.front() % p == 0)
        return false;
    std::vector<unsigned> v(m, 0);
    v[0] = 1;
    for (std::uint32_t k = 1; k < q - 1; ++k) {
        times_x(v, poly, p);
        if (encode_digits(v, p) == 1)
            return false;
    }
    times_x(v, poly, p);
    return encode_digits(v, p) == 1;
}

std::vector<unsigned> default_modulus(unsigned p, unsigned m)
{
    const std::uint32_t count = ipow(p, m);
    for (std::uint32_t idx = 0; idx < count; ++idx) {
        // Digits of idx, most significant first, are the Conway keys k_1..k_m;
        // coefficient of x^(m-i) is (-1)^i k_i.
        std::vector<unsigned> keys(m);
        std::uint32_t rest = idx;
        for (unsigned i = m; i-- > 0;) {
            keys[i] = rest % p;
            rest /= p;
        }
        std::vector<unsigned> poly(m + 1, 0);
        poly[m] = 1;
        for (unsigned i = 1; i <= m; ++i) {
            const unsigned k = keys[i - 1];
            poly[m - i] = (i % 2 == 0) ? k : (p - k) % p;
        }
        if (is_primitive(p, poly))
            return poly;
    }
    throw std::logic_error("no primitive polynomial found");
}

std::shared_ptr<const Field> Field::make(unsigned p, unsigned m, std::optional<std::vector<unsigned>> modulus)
{
    if (!is_prime(p))
        throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
    if (m < 1)
        throw std::invalid_argument("extension degree must be at least 1");
    if (ipow(p, m) > kMaxOrder)
        throw std::invalid_argument("field order exceeds 2^16");
    std::vector<unsigned> mod;
    if (modulus) {
        check_modulus_shape(p, m, *modulus);
        if (!is_irreducible(p, *modulus))
            throw std::invalid_argument("modulus is reducible");
        if (!is_primitive(p, *modulus))
            throw std::invalid_argument("x is not a primitive element under the given modulus");
        mod = *modulus;
    } else {
        mod = default_modulus(p, m);
    }
    return std::shared_ptr<const Field>(new Field(p, m, std::move(mod)));
}

std::shared_ptr<const Field> Field::of_order(std::uint32_t q)
{
    if (q < 2)
        throw std::invalid_argument("field order must be at least 2");
    unsigned p = 2;
    while (q % p != 0)
        ++p;
    unsigned m = 0;
    std::uint32_t r = q;
    while (r % p == 0) {
        r /= p;
        ++m;
    }
    if (r != 1)
        throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    return make(p, m);
}

Field::Field(unsigned p, unsigned m, std::vector<unsigned> modulus)
    : p_(p), m_(m), q_(ipow(p, m)), modulus_(std::move(modulus))
{
    const std::uint32_t n = q_ - 1;
    exp_.assign(2 * static_cast<std::size_t>(n), 0);
    log_.assign(q_, kNoLog);
    std::vector<unsigned> v(m_, 0);
    v[0] = 1;
    for (std::uint32_t k = 0; k < n; ++k) {
        const Value val = encode_digits(v, p_);
        exp_[k] = exp_[k + n] = val;
        log_[val] = static_cast<int>(k);
        times_x(v, modulus_, p_);
    }
    zech_.assign(n, kNoLog);
    for (std::uint32_t k = 0; k < n; ++k) {
        // 1 + g^k: bump the constant digit.
        Value val = exp_[k];
        const Value digit = val % p_;
        val = val - digit + (digit + 1) % p_;
        zech_[k] = val == 0 ? kNoLog : log_[val];
    }
    minus_one_ = p_ == 2 ? 1 : p_ - 1;
}

Elem Field::element(Value v) const
{
    if (v >= q_)
        throw std::out_of_range("element index " + std::to_string(v) + " outside GF(" + std::to_string(q_) + ")");
    return {*this, v};
}

Elem Field::from_int(long long v) const
{
    long long r = v % static_cast<long long>(p_);
    if (r < 0)
        r += p_;
    return {*this, static_cast<Value>(r)};
}

int Field::log(Elem a) const
{
    if (a.field() != this)
        throw FieldMismatch();
    if (a.is_zero())
        throw std::domain_error("logarithm of zero");
    return log_[a.value()];
}

std::vector<Elem> Field::elements() const
{
    std::vector<Elem> out;
    out.reserve(q_);
    for (Value v = 0; v < q_; ++v)
        out.emplace_back(*this, v);
    return out;
}

Field::Value Field::add(Value a, Value b) const
{
    if (a == 0)
        return b;
    if (b == 0)
        return a;
    const int la = log_[a];
    int k = log_[b] - la;
    if (k < 0)
        k += static_cast<int>(q_ - 1);
    const int z = zech_[k];
    if (z == kNoLog)
        return 0;
    return exp_[la + z];
}

Field::Value Field::inv(Value a) const
{
    if (a == 0)
        throw std::domain_error("division by zero in GF(" + std::to_string(q_) + ")");
    const int l = log_[a];
    return exp_[l == 0 ? 0 : (q_ - 1) - l];
}

Field::Value Field::pow(Value a, std::int64_t e) const
{
    if (a == 0) {
        if (e < 0)
            throw std::domain_error("negative power of zero");
        return e == 0 ? 1 : 0;
    }
    const auto l = static_cast<std::int64_t>(log_[a]);
    return exp_[mod_exponent(l * (e % static_cast<std::int64_t>(q_ - 1)))];
}

std::string Field::format(Elem a) const
{
    if (a.field() != this)
        throw FieldMismatch();
    if (a.is_zero())
        return "0";
    const int l = log_[a.value()];
    if (l == 0)
        return "1";
    if (l == 1)
        return "a";
    return "a^" + std::to_string(l);
}

Elem Field::parse(std::string_view text) const
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    auto bad = [&] { return std::invalid_argument("cannot parse field element '" + std::string(text) + "'"); };
    if (text.empty())
        throw bad();
    auto parse_int = [&](std::string_view s) {
        long long v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size())
            throw bad();
        return v;
    };
    if (text.front() == 'a') {
        text.remove_prefix(1);
        if (text.empty())
            return generator();
        if (text.front() != '^')
            throw bad();
        text.remove_prefix(1);
        return exp(parse_int(text));
    }
    return from_int(parse_int(text));
}

std::uint32_t Field::subfield_order() const
{
    if (m_ % 2 != 0)
        throw std::invalid_argument("GF(" + std::to_string(q_) + ") is not a quadratic extension");
    return ipow(p_, m_ / 2);
}

std::pair<Elem, Elem> Field::norm_trace(Elem a) const
{
    if (a.field() != this)
        throw FieldMismatch();
    const std::uint32_t sub = subfield_order();
    const Value frob = pow(a.value(), sub);
    return {Elem(*this, mul(frob, a.value())), Elem(*this, add(frob, a.value()))};
}

bool Field::in_subfield(Elem a) const
{
    return pow(a.value(), subfield_order()) == a.value();
}

Elem Elem::inv() const
{
    const Field& f = field_of(*this);
    return {f, f.inv(value_)};
}

Elem Elem::pow(std::int64_t e) const
{
    const Field& f = field_of(*this);
    return {f, f.pow(value_, e)};
}

Elem Elem::operator-() const
{
    const Field& f = field_of(*this);
    return {f, f.neg(value_)};
}

Elem operator+(Elem a, Elem b)
{
    const Field& f = common_field(a, b);
    return {f, f.add(a.value_, b.value_)};
}

Elem operator-(Elem a, Elem b)
{
    const Field& f = common_field(a, b);
    return {f, f.sub(a.value_, b.value_)};
}

Elem operator*(Elem a, Elem b)
{
    const Field& f = common_field(a, b);
    return {f, f.mul(a.value_, b.value_)};
}

Elem operator/(Elem a, Elem b)
{
    const Field& f = common_field(a, b);
    return {f, f.div(a.value_, b.value_)};
}

std::string Elem::to_string() const
{
    return field_of(*this).format(*this);
}

std::ostream& operator<<(std::ostream& os, Elem a)
{
    return os << (a.field() == nullptr ? std::string("<unbound>") : a.to_string());
}

}  // namespace keyeq
