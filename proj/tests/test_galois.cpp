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

#include <doctest.h>

#include <array>
#include <map>
#include <set>

#include "keyeq/galois.hpp"

using keyeq::Elem;
using keyeq::Field;

namespace {

// GF(9) as pairs (c0, c1) = c0 + c1 a with a^2 = a + 1, independent of the tables.
using Pair = std::array<int, 2>;

Pair pair_mul(Pair u, Pair v)
{
    const int c0 = u[0] * v[0];
    const int c1 = u[0] * v[1] + u[1] * v[0];
    const int c2 = u[1] * v[1];
    return {(c0 + c2) % 3, (c1 + c2) % 3};
}

Pair pair_pow_a(int k)
{
    Pair r{1, 0};
    for (int i = 0; i < k; ++i)
        r = pair_mul(r, {0, 1});
    return r;
}

Elem from_pair(const Field& f, Pair u)
{
    return f.element(static_cast<Field::Value>(u[0] + 3 * u[1]));
}

}  // namespace

TEST_CASE("GF(9) default modulus gives a^2 = a + 1")
{
    auto f = Field::make(3, 2);
    const Elem a = f->generator();
    CHECK(a * a == a + f->one());
    CHECK(a.pow(4) == f->from_int(2));
    for (int k = 0; k < 8; ++k)
        CHECK(f->exp(k) == from_pair(*f, pair_pow_a(k)));
    CHECK(f->modulus() == std::vector<unsigned>{2, 2, 1});
}

TEST_CASE("explicit modulus is honoured")
{
    auto f = Field::make(3, 2, std::vector<unsigned>{2, 2, 1});
    const Elem a = f->generator();
    CHECK(a * a == a + f->one());
    CHECK_THROWS_AS(Field::make(3, 2, std::vector<unsigned>{1, 0, 1}), std::invalid_argument);  // irreducible, x of order 4
    CHECK_THROWS_AS(Field::make(3, 2, std::vector<unsigned>{2, 0, 1}), std::invalid_argument);     // reducible
    CHECK_THROWS_AS(Field::make(3, 2, std::vector<unsigned>{1, 1}), std::invalid_argument);     // wrong degree
}

TEST_CASE("construction errors")
{
    CHECK_THROWS_AS(Field::make(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(2, 17), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(Field::of_order(12), std::invalid_argument);
}

TEST_CASE("GF(7) primitive root is 3")
{
    auto f = Field::make(7, 1);
    CHECK(f->generator() == f->from_int(3));
    CHECK(f->from_int(3).pow(6) == f->one());
    for (int k = 1; k < 6; ++k)
        CHECK_FALSE(f->from_int(3).pow(k) == f->one());
}

TEST_CASE("default moduli of small binary fields")
{
    CHECK(Field::of_order(16)->modulus() == std::vector<unsigned>{1, 1, 0, 0, 1});
    CHECK(Field::of_order(4)->modulus() == std::vector<unsigned>{1, 1, 1});
    CHECK(Field::of_order(8)->modulus() == std::vector<unsigned>{1, 1, 0, 1});
}

TEST_CASE("GF(9) arithmetic examples")
{
    auto f = Field::of_order(9);
    const Elem a = f->generator();
    CHECK(a.inv() == a.pow(7));
    CHECK(a.pow(5) * a.pow(5) == a.pow(2));
    CHECK(a.pow(2) + a.pow(7) == a.pow(5));
    CHECK(a.pow(-1) == a.pow(7));
    CHECK(a.pow(3) / a.pow(5) == a.pow(6));
    CHECK_THROWS_AS(f->zero().inv(), std::domain_error);
    CHECK_THROWS_AS(a / f->zero(), std::domain_error);
}

TEST_CASE("mixed-field operands are rejected")
{
    auto f = Field::of_order(9);
    auto g = Field::of_order(9);
    CHECK_THROWS_AS(f->one() + g->one(), keyeq::FieldMismatch);
    CHECK_THROWS_AS(f->one() * g->generator(), keyeq::FieldMismatch);
}

TEST_CASE("field axioms and tables, exhaustive for small fields")
{
    for (std::uint32_t q : {2u, 3u, 4u, 7u, 8u, 9u, 16u, 25u, 27u}) {
        auto f = Field::of_order(q);
        CAPTURE(q);
        const auto els = f->elements();
        REQUIRE(els.size() == q);
        const unsigned p = f->characteristic();
        for (Elem x : els) {
            CHECK(x + f->zero() == x);
            CHECK(x * f->one() == x);
            CHECK(x - x == f->zero());
            CHECK(x + (-x) == f->zero());
            CHECK(x.pow(q) == x);
            if (!x.is_zero()) {
                CHECK(x.pow(q - 1) == f->one());
                CHECK(x * x.inv() == f->one());
                CHECK(f->exp(f->log(x)) == x);
            }
            for (Elem y : els) {
                CHECK(x + y == y + x);
                CHECK(x * y == y * x);
                CHECK((x + y).pow(p) == x.pow(p) + y.pow(p));
            }
        }
        for (int i = 0; i < static_cast<int>(q) - 1; ++i)
            for (int j = 0; j < static_cast<int>(q) - 1; ++j)
                CHECK(f->exp(i) * f->exp(j) == f->exp((i + j) % (q - 1)));
    }
}

TEST_CASE("distributivity on GF(16)")
{
    auto f = Field::of_order(16);
    const auto els = f->elements();
    for (Elem x : els)
        for (Elem y : els)
            for (Elem z : els)
                CHECK(x * (y + z) == x * y + x * z);
}

TEST_CASE("text format round trip")
{
    auto f = Field::of_order(9);
    CHECK(f->format(f->zero()) == "0");
    CHECK(f->format(f->one()) == "1");
    CHECK(f->format(f->generator()) == "a");
    CHECK(f->format(f->exp(7)) == "a^7");
    for (Elem x : f->elements())
        CHECK(f->parse(f->format(x)) == x);
    CHECK(f->parse("2") == f->exp(4));
    CHECK(f->parse("a^-1") == f->exp(7));
    CHECK_THROWS_AS(f->parse("b"), std::invalid_argument);
    CHECK_THROWS_AS(f->parse(""), std::invalid_argument);
}

TEST_CASE("norm and trace")
{
    auto f = Field::of_order(9);
    const Elem a = f->generator();
    CHECK(f->norm_trace(f->zero()) == std::pair{f->zero(), f->zero()});
    CHECK(f->norm_trace(a).first == a.pow(4));
    CHECK(f->norm_trace(a).first == f->from_int(2));
    CHECK(f->norm_trace(f->one()) == std::pair{f->one(), f->from_int(2)});
    CHECK_THROWS_AS(Field::of_order(7)->norm_trace(Field::of_order(7)->one()), std::invalid_argument);
    CHECK_THROWS_AS(Field::of_order(8)->subfield_order(), std::invalid_argument);
}

TEST_CASE("norm and trace fibres")
{
    for (std::uint32_t q2 : {4u, 9u, 16u, 25u, 49u, 64u, 256u}) {
        auto f = Field::of_order(q2);
        const std::uint32_t q = f->subfield_order();
        CAPTURE(q2);
        std::map<std::uint32_t, int> norm_count, trace_count;
        for (Elem x : f->elements()) {
            auto [n, t] = f->norm_trace(x);
            CHECK(f->in_subfield(n));
            CHECK(f->in_subfield(t));
            ++norm_count[n.value()];
            ++trace_count[t.value()];
        }
        CHECK(norm_count.size() == q);
        CHECK(trace_count.size() == q);
        for (auto [v, c] : norm_count)
            CHECK(c == (v == 0 ? 1 : static_cast<int>(q) + 1));
        for (auto [v, c] : trace_count)
            CHECK(c == static_cast<int>(q));
        // Affine points of X^(q+1) = Y^q + Y: sum over norm values of fibre products.
        std::size_t points = 0;
        for (auto [v, c] : norm_count)
            points += static_cast<std::size_t>(c) * trace_count[v];
        CHECK(points == static_cast<std::size_t>(q) * q * q);
    }
}

TEST_CASE("primality and polynomial predicates")
{
    CHECK(keyeq::is_prime(2));
    CHECK(keyeq::is_prime(65521));
    CHECK_FALSE(keyeq::is_prime(1));
    CHECK_FALSE(keyeq::is_prime(91));
    CHECK(keyeq::is_irreducible(2, {1, 1, 1}));
    CHECK_FALSE(keyeq::is_irreducible(2, {1, 0, 1}));
    CHECK(keyeq::is_irreducible(2, {1, 1, 1, 1, 1}));
    CHECK_FALSE(keyeq::is_primitive(2, {1, 1, 1, 1, 1}));  // x^5 = 1
    CHECK(keyeq::is_primitive(2, {1, 1, 0, 0, 1}));
}
