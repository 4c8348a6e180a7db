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

#include <fstream>
#include <sstream>

#include "hermitian_util.hpp"
#include "keyeq/cli/examples.hpp"
#include "keyeq/cli/table.hpp"
#include "kotter_checks.hpp"

using keyeq::Elem;
using keyeq::Field;
using keyeq::hermitian::CurvePoly;
using keyeq::hermitian::HermitianCurve;
using keyeq::hermitian::KotterSolver;
using keyeq::hermitian::SyndromeArray;
using keyeq::testing::cp;
namespace herm = keyeq::hermitian;
namespace cli = keyeq::cli;

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    REQUIRE_MESSAGE(in.good(), "cannot open " << path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<Elem> parse_row(const Field& F, std::initializer_list<const char*> v)
{
    std::vector<Elem> out;
    for (const char* s : v)
        out.push_back(F.parse(s));
    return out;
}

}  // namespace

TEST_CASE("syndrome tables of the two examples")
{
    auto C = HermitianCurve::build(3);
    const Field& F = C->field();
    const std::vector<std::vector<Elem>> generic = {
        parse_row(F, {"a^5", "a^2", "a^5", "0", "1", "2", "a^6", "a^5", "a^5"}),
        parse_row(F, {"2", "1", "a^2", "a", "a", "a^6", "a", "0", "2"}),
        parse_row(F, {"a^5", "a^2", "a^5", "0", "1", "2", "a^6", "a^5", "a^5"}),
    };
    const std::vector<std::vector<Elem>> non_generic = {
        parse_row(F, {"a^5", "a^7", "a", "a^3", "a^5", "a^7", "a", "a^3", "a^5"}),
        parse_row(F, {"a^7", "a", "a^3", "a^5", "a^7", "a", "a^3", "a^5", "a^7"}),
        parse_row(F, {"a^2", "2", "a^6", "1", "a^2", "2", "a^6", "1", "a^2"}),
    };
    for (const auto* ex : {&cli::generic_example(), &cli::non_generic_example()}) {
        CAPTURE(ex->name);
        const auto& want = ex == &cli::generic_example() ? generic : non_generic;
        const auto S = herm::syndrome_array(*C, cli::example_error(*C, *ex), 9);
        for (int b = 0; b < 3; ++b)
            for (int a = 0; a < 9; ++a)
                CHECK(S.at(a, b) == want[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)]);
    }
    const auto S = herm::syndrome_array(*C, cli::example_error(*C, cli::non_generic_example()), 9);
    CHECK(S.at(0, 1) == F.parse("a^7"));
}

TEST_CASE("syndrome availability")
{
    auto C = HermitianCurve::build(3);
    std::vector<Elem> e(27, C->field().zero());
    e[5] = C->field().one();
    const auto S = herm::syndrome_array(*C, e, 6, 8);
    CHECK(S.available(2, 0));   // order 6
    CHECK(S.available(0, 2));   // order 8
    CHECK_FALSE(S.available(3, 0));  // order 9
    CHECK(S.get(-3, 1) == C->field().zero());
    CHECK_FALSE(S.get(1, 2));
    CHECK_THROWS_AS(S.at(1, 2), keyeq::WindowExhausted);
    CHECK_FALSE(S.is_zero());
    CHECK(herm::syndrome_array(*C, std::vector<Elem>(27, C->field().zero()), 5).is_zero());
    CHECK_THROWS_AS(herm::syndrome_array(*C, std::vector<Elem>(26, C->field().zero()), 5), std::invalid_argument);
}

TEST_CASE("discrepancy examples")
{
    auto C = HermitianCurve::build(3);
    const Field& F = C->field();
    const auto S = herm::syndrome_array(*C, cli::example_error(*C, cli::generic_example()), 9);
    CHECK(herm::discrepancy(cp(*C, "1"), 0, 0, S) == F.parse("a^5"));
    CHECK(herm::discrepancy(cp(*C, "x"), -2, 1, S) == F.zero());
    CHECK(herm::discrepancy(cp(*C, "x"), 0, 0, S) == F.parse("a^2"));
    // Unknown entries are reported, not guessed.
    const auto T = herm::syndrome_array(*C, cli::example_error(*C, cli::generic_example()), 9, 4);
    CHECK_FALSE(herm::discrepancy(cp(*C, "x"), 1, 0, T));
}

TEST_CASE("fS window")
{
    auto C = HermitianCurve::build(3);
    const auto e = cli::example_error(*C, cli::generic_example());
    const auto S = herm::syndrome_array(*C, e, 12);
    // f = 1 reproduces the table.
    const auto T = herm::fS_window(cp(*C, "1"), S, 0, 9);
    for (int b = 0; b < 3; ++b) {
        CHECK(T.component(b).begin() == 0);
        for (int a = 0; a < 9; ++a)
            CHECK(T.coeff(a, b) == S.at(a, b));
    }
    // A locator kills every fractional coefficient.
    const auto fp = herm::footprint_oracle(*C, e);
    for (const auto& f : fp.locators) {
        const auto L = herm::fS_window(f, S, 0, 6);
        for (int b = 0; b < 3; ++b)
            CHECK(L.component(b).zero_on(0, 6));
    }
    // (y^b, 0) solves the -b(q+1) key equation, and nothing stronger in general.
    for (int b = 0; b < 3; ++b)
        CHECK(keyeq::testing::approx_key_equation(CurvePoly::y_pow(*C, b), CurvePoly(*C), S, -b * 4));
    CHECK_FALSE(keyeq::testing::approx_key_equation(CurvePoly::y_pow(*C, 0), CurvePoly(*C), S, 1));
    CHECK_THROWS_AS(herm::fS_window(cp(*C, "x^2"), S, 0, 11), keyeq::WindowExhausted);
}

TEST_CASE("zero syndromes leave the initial state")
{
    auto C = HermitianCurve::build(3);
    const auto S = herm::syndrome_array(*C, std::vector<Elem>(27, C->field().zero()), 20);
    const auto r = herm::kotter_solve(*C, S, 13);
    for (int i = 0; i < 3; ++i)
        CHECK(r.state[static_cast<std::size_t>(i)].f == CurvePoly::y_pow(*C, i));
    for (const auto& row : r.trace)
        CHECK(row.kase == herm::KotterCase::skip);
    const auto init = herm::kotter_initial_state(*C);
    CHECK(init[0].psi == cp(*C, "2 y^2 + 2"));
    CHECK(init[1].psi == cp(*C, "2 y"));
    CHECK(init[2].psi == cp(*C, "2"));
}

TEST_CASE("solver refuses to run past the known syndromes")
{
    auto C = HermitianCurve::build(3);
    const auto S = herm::syndrome_array(*C, cli::example_error(*C, cli::generic_example()), 9, 5);
    KotterSolver k(*C, S);
    for (int m = 0; m <= 5; ++m)
        k.step();
    const auto before = k.state();
    CHECK_THROWS_AS(k.step(), keyeq::WindowExhausted);
    CHECK(k.iteration() == 6);
    for (int i = 0; i < 3; ++i)
        CHECK(k.state()[static_cast<std::size_t>(i)].f == before[static_cast<std::size_t>(i)].f);
}

TEST_CASE("step tables replay exactly")
{
    auto C = HermitianCurve::build(3);
    for (const char* name : {"generic", "non-generic"}) {
        CAPTURE(name);
        const auto& ex = cli::example_by_name(name);
        const auto table = cli::parse_table(read_file(std::string(KEYEQ_FIXTURE_DIR) + "/" + name + "_table.txt"));
        CHECK(table.size() == 3 * 15);
        const auto S = herm::syndrome_array(*C, cli::example_error(*C, ex), 40);
        const auto res = herm::kotter_solve(*C, S, 13);
        const auto diffs = cli::compare_table(*C, table, res.trace);
        for (const auto& d : diffs)
            FAIL_CHECK(d);
        CHECK(diffs.empty());
    }
}

TEST_CASE("table comparison detects a changed cell")
{
    auto C = HermitianCurve::build(3);
    std::string text = read_file(std::string(KEYEQ_FIXTURE_DIR) + "/generic_table.txt");
    const auto pos = text.find("x^2 + x + a^7");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 13, "x^2 + x + a^6");
    const auto S = herm::syndrome_array(*C, cli::example_error(*C, cli::generic_example()), 40);
    const auto res = herm::kotter_solve(*C, S, 13);
    CHECK_FALSE(cli::compare_table(*C, cli::parse_table(text), res.trace).empty());
    CHECK_THROWS_AS(cli::parse_table("0 | 1 | 2\n"), std::invalid_argument);
}

TEST_CASE("generic example results")
{
    auto C = HermitianCurve::build(3);
    const Field& F = C->field();
    const auto S = herm::syndrome_array(*C, cli::example_error(*C, cli::generic_example()), 40);
    const auto r = herm::kotter_solve(*C, S, 13);
    CHECK(r.state[0].f == cp(*C, "x^2 + x + a^7"));
    CHECK(r.state[1].f == cp(*C, "y + a^5 x + a"));
    CHECK(r.state[2].f == cp(*C, "y^2 + a^7 x^2 + a^7 x + a^3"));
    CHECK(r.state[0].phi == cp(*C, "a^5 x y^2 + y^2 + 2 x y + a x + 2"));
    CHECK(r.state[1].phi == cp(*C, "a^5 x^3 + a^2 y^2 + a^2 x^2 + a y + a^5 x + a^6"));
    CHECK(r.state[2].phi ==
          cp(*C, "a^5 x^3 y + 2 x y^2 + a^2 x^2 y + 2 x^3 + a^7 y^2 + a^2 x y + x^2 + a^7 x + 1"));
    CHECK(r.state[0].g == cp(*C, "a^6 x + a^7"));
    CHECK(r.state[1].g.is_zero());
    CHECK(r.state[2].g.is_zero());

    std::vector<CurvePoly> fs, gs;
    for (const auto& s : r.state) {
        fs.push_back(s.f);
        gs.push_back(s.g);
    }
    const auto pos = herm::locate_errors(*C, fs);
    REQUIRE(pos == std::vector<std::size_t>{3, 20});
    CHECK(C->point(20).y == F.parse("2"));

    const auto v1 = herm::forney_values(*C, fs[1], r.state[1].phi, pos);
    CHECK(v1[0] == F.parse("a^2"));
    CHECK(v1[1] == F.parse("a^7"));
    const auto v0 = herm::forney_values(*C, fs[0], r.state[0].phi, pos);
    CHECK(v0[0] == F.parse("a^2"));
    CHECK(v0[1] == F.parse("a^7"));
    // f2 does not have a simple zero at P21.
    CHECK(fs[2](C->point(20)).is_zero());
    CHECK(fs[2].derivative()(C->point(20)).is_zero());
    CHECK_FALSE(herm::forney_values(*C, fs[2], r.state[2].phi, {20})[0]);

    CHECK(fs[0].derivative()(C->point(3)) == F.parse("a^3"));
    CHECK(gs[0](C->point(3)) == F.parse("a^3"));
    CHECK(fs[0].derivative()(C->point(20)) == F.parse("a^7"));
    CHECK(gs[0](C->point(20)) == F.parse("a^2"));
    const auto hv = herm::horiguchi_values(*C, fs, gs, pos);
    CHECK(hv[0] == F.parse("a^2"));
    CHECK(hv[1] == F.parse("a^7"));
    CHECK(herm::forney_values(*C, fs[1], r.state[1].phi, {}).empty());
}

TEST_CASE("non-generic example: the first locator settles after iteration 3")
{
    auto C = HermitianCurve::build(3);
    const auto S = herm::syndrome_array(*C, cli::example_error(*C, cli::non_generic_example()), 40);
    KotterSolver k(*C, S);
    for (int m = 0; m <= 13; ++m) {
        k.step();
        if (m >= 3)
            CHECK(k.state()[0].f == cp(*C, "x + a^6"));
        else
            CHECK_FALSE(k.state()[0].f == cp(*C, "x + a^6"));
    }
    std::vector<CurvePoly> fs;
    for (const auto& s : k.state())
        fs.push_back(s.f);
    CHECK(herm::locate_errors(*C, fs) == std::vector<std::size_t>{6, 8});
}

TEST_CASE("trace line format")
{
    auto C = HermitianCurve::build(3);
    const auto S = herm::syndrome_array(*C, cli::example_error(*C, cli::generic_example()), 40);
    const auto r = herm::kotter_solve(*C, S, 0);
    REQUIRE(r.trace.size() == 3);
    CHECK(r.trace[0].to_string() == "m=0 i=0 j=0 r=0 tf=1 mu=a^5 p=-1 f=x phi=a^5 y^2 + a^5 g=a^3 psi=0");
    CHECK(r.trace[1].to_string() == "m=0 i=1 j=2 r=-4 tf=x^4 + a^4 y mu=a^5 p=3 f=y phi=a^5 x^3 g=0 psi=a^4 y");
}

TEST_CASE("invariants on the two examples")
{
    auto C = HermitianCurve::build(3);
    for (const char* name : {"generic", "non-generic"}) {
        CAPTURE(name);
        const auto bad = keyeq::testing::run_checked(*C, cli::example_error(*C, cli::example_by_name(name)));
        for (const auto& b : bad)
            FAIL_CHECK(b);
    }
}

TEST_CASE("invariants on random errors")
{
    std::mt19937_64 rng(2026);
    for (int q : {2, 3, 4}) {
        auto C = HermitianCurve::build(q);
        for (int t = 0; t < 20; ++t) {
            const auto w = static_cast<std::size_t>(rng() % 4);
            const auto e = keyeq::testing::random_error(C->field(), C->n(), w, rng);
            CAPTURE(q);
            CAPTURE(t);
            const auto bad = keyeq::testing::run_checked(*C, e);
            for (const auto& b : bad)
                FAIL_CHECK(b);
            CHECK(bad.empty());
        }
    }
}
