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

#include "hermitian_util.hpp"
#include "keyeq/cli/examples.hpp"

using keyeq::Elem;
using keyeq::EvalMethod;
using keyeq::Field;
using keyeq::kNegInf;
using keyeq::Matrix;
using keyeq::hermitian::CurvePoly;
using keyeq::hermitian::DecodeStatus;
using keyeq::hermitian::HermitianCurve;
namespace herm = keyeq::hermitian;
namespace cli = keyeq::cli;

namespace {

// Footprint by ranks: order o is in the footprint iff adding the evaluation
// vector of its monomial on supp(e) raises the rank.
std::vector<int> footprint_by_rank(const HermitianCurve& C, const std::vector<Elem>& e, int limit)
{
    std::vector<std::size_t> supp;
    for (std::size_t k = 0; k < e.size(); ++k)
        if (!e[k].is_zero())
            supp.push_back(k);
    Matrix A(C.field(), 0, supp.size());
    std::size_t rank = 0;
    std::vector<int> out;
    for (int o : C.semigroup_up_to(limit)) {
        const auto ab = C.monomial_of_order(o);
        const auto mono = CurvePoly::monomial(C, C.field().one(), ab->first, ab->second);
        std::vector<Elem> row;
        for (std::size_t k : supp)
            row.push_back(mono(C.point(k)));
        A.append_row(row);
        const std::size_t r = A.rank();
        if (r > rank)
            out.push_back(o);
        rank = r;
    }
    return out;
}

std::vector<Elem> add(const std::vector<Elem>& a, const std::vector<Elem>& b)
{
    std::vector<Elem> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        c[i] = a[i] + b[i];
    return c;
}

}  // namespace

TEST_CASE("footprints of the two examples")
{
    auto C = HermitianCurve::build(3);
    const auto g = herm::footprint_oracle(*C, cli::example_error(*C, cli::generic_example()));
    CHECK(g.delta == std::vector<int>{0, 3});
    CHECK(g.sigma == std::vector<int>{6, 4, 8});
    CHECK(g.sigma_max == 8);
    CHECK(g.delta_max == 3);
    CHECK(herm::termination_bound(g, 3) == 13);
    const auto n = herm::footprint_oracle(*C, cli::example_error(*C, cli::non_generic_example()));
    CHECK(n.delta == std::vector<int>{0, 4});
    CHECK(n.sigma == std::vector<int>{3, 7, 8});
    CHECK(n.delta_max == 4);
    CHECK(herm::termination_bound(n, 3) == 13);
    CHECK(n.locators[0] == keyeq::testing::cp(*C, "x + a^6"));
}

TEST_CASE("footprint of the zero vector")
{
    for (int q : {2, 3, 4}) {
        auto C = HermitianCurve::build(q);
        const auto r = herm::footprint_oracle(*C, std::vector<Elem>(C->n(), C->field().zero()));
        CHECK(r.delta.empty());
        CHECK(r.delta_max == kNegInf);
        for (int i = 0; i < q; ++i)
            CHECK(r.sigma[static_cast<std::size_t>(i)] == i * (q + 1));
        CHECK(herm::termination_bound(r, q) == (q - 1) * (q + 1) + q * q - q - 1);
    }
}

TEST_CASE("footprint oracle agrees with a rank computation")
{
    std::mt19937_64 rng(8);
    for (int q : {2, 3, 4}) {
        auto C = HermitianCurve::build(q);
        for (int t = 0; t < 25; ++t) {
            const auto w = 1 + rng() % 5;
            const auto e = keyeq::testing::random_error(C->field(), C->n(), w, rng);
            const auto r = herm::footprint_oracle(*C, e);
            CHECK(r.delta.size() == w);
            CHECK(r.delta == footprint_by_rank(*C, e, r.sigma_max + q * q));
            for (int i = 0; i < q; ++i) {
                const auto& f = r.locators[static_cast<std::size_t>(i)];
                CHECK(f.is_monic());
                CHECK(f.rho() == r.sigma[static_cast<std::size_t>(i)]);
                for (std::size_t k = 0; k < e.size(); ++k)
                    if (!e[k].is_zero())
                        CHECK(f(C->point(k)).is_zero());
            }
            CHECK(herm::footprint_from_locators(*C, r.locators).delta == r.delta);
        }
    }
}

TEST_CASE("footprint from locators validates classes")
{
    auto C = HermitianCurve::build(3);
    using keyeq::testing::cp;
    CHECK_THROWS_AS(herm::footprint_from_locators(*C, {cp(*C, "x"), cp(*C, "x"), cp(*C, "y^2")}),
                    std::invalid_argument);
    CHECK_THROWS_AS(herm::footprint_from_locators(*C, {cp(*C, "x")}), std::invalid_argument);
}

TEST_CASE("check matrix row orders")
{
    auto C = HermitianCurve::build(3);
    CHECK(herm::check_row_orders(*C, 0) == std::vector<int>{0});
    CHECK(herm::check_row_orders(*C, 4) == std::vector<int>{0, 3, 4});
    CHECK(herm::check_row_orders(*C, 8) == std::vector<int>{0, 3, 4, 6, 7, 8});
    try {
        herm::check_row_orders(*C, 5);
        FAIL("expected an error");
    } catch (const std::invalid_argument& ex) {
        const std::string msg = ex.what();
        CHECK(msg.find("4 and 6") != std::string::npos);
    }
    // x^9 = x on every point, so rows stop at a < q^2.
    auto C2 = HermitianCurve::build(2);
    for (int o : herm::check_row_orders(*C2, 40))
        CHECK(C2->monomial_of_order(o)->first < 4);
}

TEST_CASE("check rows are monomial evaluations")
{
    auto C = HermitianCurve::build(3);
    const Matrix H = herm::code_check_matrix(*C, 8);
    REQUIRE(H.rows() == 6);
    // Row 2 is y (order 4).
    for (std::size_t k = 0; k < C->n(); ++k) {
        CHECK(H.at(0, k) == C->field().one());
        CHECK(H.at(1, k) == C->point(k).x);
        CHECK(H.at(2, k) == C->point(k).y);
        CHECK(H.at(5, k) == C->point(k).y * C->point(k).y);
    }
}

TEST_CASE("code and check matrix are dual")
{
    for (int q : {2, 3, 4}) {
        auto C = HermitianCurve::build(q);
        for (int m : C->semigroup_up_to(2 * q * q)) {
            const Matrix H = herm::code_check_matrix(*C, m);
            const Matrix G = herm::code_generator_matrix(*C, m);
            CAPTURE(q);
            CAPTURE(m);
            CHECK((G * H.transpose()).is_zero());
            CHECK(G.rank() + H.rank() == C->n());
            CHECK(G.rank() == G.rows());
        }
    }
    auto C = HermitianCurve::build(3);
    CHECK(herm::code_generator_matrix(*C, 13).rows() == 16);
}

TEST_CASE("encoding lands in the code")
{
    std::mt19937_64 rng(4);
    auto C = HermitianCurve::build(3);
    const Matrix G = herm::code_generator_matrix(*C, 13);
    const Matrix H = herm::code_check_matrix(*C, 13);
    for (int t = 0; t < 10; ++t) {
        std::vector<Elem> msg;
        for (std::size_t i = 0; i < G.rows(); ++i)
            msg.push_back(keyeq::testing::random_elem(C->field(), rng));
        const auto c = herm::encode(G, msg);
        for (Elem s : H.right_mul(c))
            CHECK(s.is_zero());
    }
    CHECK_THROWS_AS(herm::encode(G, {C->field().one()}), std::invalid_argument);
}

TEST_CASE("decode: error-free word")
{
    auto C = HermitianCurve::build(3);
    const Matrix G = herm::code_generator_matrix(*C, 13);
    std::mt19937_64 rng(1);
    std::vector<Elem> msg;
    for (std::size_t i = 0; i < G.rows(); ++i)
        msg.push_back(keyeq::testing::random_elem(C->field(), rng));
    const auto c = herm::encode(G, msg);
    const auto r = herm::decode(*C, 13, c);
    CHECK(r.report.status == DecodeStatus::success);
    CHECK(r.corrected == c);
    CHECK(r.report.positions.empty());
}

TEST_CASE("decode: the two examples on a random codeword")
{
    auto C = HermitianCurve::build(3);
    const Matrix G = herm::code_generator_matrix(*C, 13);
    std::mt19937_64 rng(2);
    for (const auto* ex : {&cli::generic_example(), &cli::non_generic_example()}) {
        std::vector<Elem> msg;
        for (std::size_t i = 0; i < G.rows(); ++i)
            msg.push_back(keyeq::testing::random_elem(C->field(), rng));
        const auto c = herm::encode(G, msg);
        const auto e = cli::example_error(*C, *ex);
        for (EvalMethod m : {EvalMethod::forney, EvalMethod::horiguchi}) {
            const auto r = herm::decode(*C, 13, add(c, e), m);
            CHECK(r.report.status == DecodeStatus::success);
            CHECK(r.corrected == c);
            CHECK(r.report.bound == 13);
            CHECK(r.report.iterations == 14);
            CHECK(r.report.footprint.delta == ex->footprint);
        }
    }
}

TEST_CASE("decode: too few syndromes is reported")
{
    auto C = HermitianCurve::build(3);
    std::vector<Elem> e(C->n(), C->field().zero());
    e[10] = C->field().parse("a^3");
    const auto r = herm::decode(*C, 8, e);
    CHECK(r.report.status == DecodeStatus::window_exhausted);
    CHECK(r.corrected == e);
    CHECK_THROWS_AS(herm::decode(*C, 5, e), std::invalid_argument);
}

TEST_CASE("decode: random errors within reach")
{
    std::mt19937_64 rng(99);
    for (int q : {2, 3, 4}) {
        auto C = HermitianCurve::build(q);
        const int m = 2 * q * q + 2;  // in the semigroup for these q
        REQUIRE(C->in_semigroup(m));
        const Matrix G = herm::code_generator_matrix(*C, m);
        int decoded = 0;
        for (int t = 0; t < 30; ++t) {
            std::vector<Elem> msg;
            for (std::size_t i = 0; i < G.rows(); ++i)
                msg.push_back(keyeq::testing::random_elem(C->field(), rng));
            const auto c = herm::encode(G, msg);
            const auto e = keyeq::testing::random_error(C->field(), C->n(), 1 + rng() % 3, rng);
            const int M = herm::termination_bound(herm::footprint_oracle(*C, e), q);
            for (EvalMethod meth : {EvalMethod::forney, EvalMethod::horiguchi}) {
                const auto r = herm::decode(*C, m, add(c, e), meth);
                CAPTURE(q);
                CAPTURE(t);
                if (M <= m) {
                    CHECK(r.report.status == DecodeStatus::success);
                    CHECK(r.corrected == c);
                    decoded += r.corrected == c;
                }
            }
        }
        CHECK(decoded > 0);
    }
}

TEST_CASE("decode: weight one over q = 3")
{
    auto C = HermitianCurve::build(3);
    for (std::size_t k = 0; k < C->n(); ++k) {
        std::vector<Elem> e(C->n(), C->field().zero());
        e[k] = C->field().exp(static_cast<std::int64_t>(k));
        const auto r = herm::decode(*C, 13, e, EvalMethod::horiguchi);
        CHECK(r.report.status == DecodeStatus::success);
        CHECK(r.report.positions == std::vector<std::size_t>{k});
        for (Elem x : r.corrected)
            CHECK(x.is_zero());
    }
}
