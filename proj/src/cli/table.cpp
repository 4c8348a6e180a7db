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

#include "keyeq/cli/table.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "keyeq/hermitian/curve_poly.hpp"

namespace keyeq::cli {

namespace {

std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_cells(std::string_view line)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto bar = line.find('|', start);
        out.push_back(trim(line.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start)));
        if (bar == std::string_view::npos)
            break;
        start = bar + 1;
    }
    return out;
}

std::optional<std::string> cell(const std::string& s)
{
    if (s.empty() || s == "-")
        return std::nullopt;
    return s;
}

std::optional<int> int_cell(const std::string& s, int line_no)
{
    if (s.empty() || s == "-")
        return std::nullopt;
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used == s.size())
            return v;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("line " + std::to_string(line_no) + ": bad integer '" + s + "'");
}

struct Quad {
    std::string f, phi, g, psi;
};

}  // namespace

std::vector<TableRow> parse_table(std::string_view text)
{
    std::vector<TableRow> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#')
            continue;
        const auto c = split_cells(t);
        if (c.size() != 11)
            throw std::invalid_argument("line " + std::to_string(line_no) + ": expected 11 cells, got " +
                                        std::to_string(c.size()));
        TableRow r;
        r.m = *int_cell(c[0], line_no);
        r.i = *int_cell(c[1], line_no);
        r.j = int_cell(c[2], line_no);
        r.r = int_cell(c[3], line_no);
        r.tf = cell(c[4]);
        r.mu = cell(c[5]);
        r.p = int_cell(c[6], line_no);
        r.f = cell(c[7]);
        r.phi = cell(c[8]);
        r.g = cell(c[9]);
        r.psi = cell(c[10]);
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<std::string> compare_table(const hermitian::HermitianCurve& curve, const std::vector<TableRow>& table,
                                       const std::vector<hermitian::KotterRow>& trace)
{
    using hermitian::CurvePoly;
    std::vector<std::string> diffs;
    const Field& F = curve.field();
    const int q = curve.q();

    auto check_poly = [&](const std::string& where, const std::string& name, const std::string& expected,
                          const CurvePoly& actual) {
        CurvePoly want(curve);
        try {
            want = CurvePoly::parse(curve, expected);
        } catch (const std::exception& ex) {
            diffs.push_back(where + " " + name + ": cannot parse '" + expected + "': " + ex.what());
            return;
        }
        if (!(want == actual))
            diffs.push_back(where + " " + name + ": expected " + want.to_string() + ", got " + actual.to_string());
    };
    auto check_int = [&](const std::string& where, const std::string& name, int expected, int actual) {
        if (expected != actual)
            diffs.push_back(where + " " + name + ": expected " + std::to_string(expected) + ", got " +
                            std::to_string(actual));
    };

    // Expected state as carried forward through unchanged cells.
    std::map<int, Quad> expect;
    std::map<std::pair<int, int>, const hermitian::KotterRow*> by_key;
    for (const auto& row : trace)
        by_key[{row.m, row.i}] = &row;

    const auto init = hermitian::kotter_initial_state(curve);
    int current_m = -2;
    auto flush = [&](int m) {
        // Compare the carried state after iteration m with the trace.
        if (m < 0)
            return;
        for (int i = 0; i < q; ++i) {
            auto it = by_key.find({m, i});
            if (it == by_key.end()) {
                diffs.push_back("m=" + std::to_string(m) + " i=" + std::to_string(i) + ": missing from trace");
                continue;
            }
            const auto& tr = *it->second;
            const auto& ex = expect[i];
            const std::string where = "m=" + std::to_string(m) + " i=" + std::to_string(i);
            check_poly(where, "f", ex.f, tr.f);
            check_poly(where, "phi", ex.phi, tr.phi);
            check_poly(where, "g", ex.g, tr.g);
            check_poly(where, "psi", ex.psi, tr.psi);
        }
    };

    for (const TableRow& row : table) {
        if (row.m != current_m) {
            flush(current_m);
            current_m = row.m;
        }
        if (row.i < 0 || row.i >= q) {
            diffs.push_back("table row m=" + std::to_string(row.m) + " has bad class " + std::to_string(row.i));
            continue;
        }
        Quad& ex = expect[row.i];
        if (row.f)
            ex.f = *row.f;
        if (row.phi)
            ex.phi = *row.phi;
        if (row.g)
            ex.g = *row.g;
        if (row.psi)
            ex.psi = *row.psi;
        const std::string where = "m=" + std::to_string(row.m) + " i=" + std::to_string(row.i);
        if (row.m < 0) {
            const auto& st = init[static_cast<std::size_t>(row.i)];
            if (row.f)
                check_poly(where, "f", *row.f, st.f);
            if (row.phi)
                check_poly(where, "phi", *row.phi, st.phi);
            if (row.g)
                check_poly(where, "g", *row.g, st.g);
            if (row.psi)
                check_poly(where, "psi", *row.psi, st.psi);
            continue;
        }
        auto it = by_key.find({row.m, row.i});
        if (it == by_key.end()) {
            diffs.push_back(where + ": missing from trace");
            continue;
        }
        const auto& tr = *it->second;
        if (row.j)
            check_int(where, "j", *row.j, tr.j);
        if (row.r)
            check_int(where, "r", *row.r, tr.r);
        if (row.p)
            check_int(where, "p", *row.p, tr.p);
        if (row.tf)
            check_poly(where, "tf", *row.tf, tr.tf);
        if (row.mu) {
            try {
                const Elem want = F.parse(*row.mu);
                if (want != tr.mu)
                    diffs.push_back(where + " mu: expected " + want.to_string() + ", got " + tr.mu.to_string());
            } catch (const std::exception& ex) {
                diffs.push_back(where + " mu: cannot parse '" + *row.mu + "': " + ex.what());
            }
        }
    }
    flush(current_m);
    return diffs;
}

}  // namespace keyeq::cli
