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

#include "keyeq/hermitian/kotter.hpp"

#include <stdexcept>

namespace keyeq::hermitian {

const char* to_string(KotterCase c)
{
    switch (c) {
    case KotterCase::skip:
        return "skip";
    case KotterCase::shift:
        return "shift";
    case KotterCase::reduce:
        return "reduce";
    }
    return "?";
}

std::string KotterRow::to_string() const
{
    return "m=" + std::to_string(m) + " i=" + std::to_string(i) + " j=" + std::to_string(j) +
           " r=" + std::to_string(r) + " tf=" + tf.to_string() + " mu=" + mu.to_string() + " p=" + std::to_string(p) +
           " f=" + f.to_string() + " phi=" + phi.to_string() + " g=" + g.to_string() + " psi=" + psi.to_string();
}

std::vector<KotterQuad> kotter_initial_state(const HermitianCurve& curve)
{
    const int q = curve.q();
    const Elem minus_one = -curve.field().one();
    std::vector<KotterQuad> st;
    for (int i = 0; i < q; ++i) {
        // zeta*_0 = y^(q-1) + 1, zeta*_i = y^(q-1-i)
        CurvePoly zeta = CurvePoly::y_pow(curve, q - 1 - i);
        if (i == 0)
            zeta += CurvePoly::constant(curve, curve.field().one());
        st.push_back({CurvePoly::y_pow(curve, i), CurvePoly(curve), CurvePoly(curve), minus_one * zeta});
    }
    return st;
}

KotterSolver::KotterSolver(const HermitianCurve& curve, const SyndromeArray& s)
    : curve_(&curve), s_(&s), st_(kotter_initial_state(curve))
{
    if (&s.curve() != &curve)
        throw std::invalid_argument("syndromes belong to a different curve");
}

namespace {

int exact_div(int num, int den)
{
    if (num % den != 0)
        throw std::logic_error("solver invariant broken: " + std::to_string(num) + " not divisible by " +
                               std::to_string(den));
    return num / den;
}

int mod(int a, int q)
{
    const int r = a % q;
    return r < 0 ? r + q : r;
}

}  // namespace

std::vector<KotterRow> KotterSolver::step()
{
    const HermitianCurve& C = *curve_;
    const int q = C.q();
    const int m = m_;
    const std::vector<KotterQuad>& old = st_;

    struct Pending {
        int j, r, p;
        CurvePoly tf;
        Elem mu;
    };
    std::vector<Pending> pend;
    pend.reserve(static_cast<std::size_t>(q));
    for (int i = 0; i < q; ++i) {
        const int j = mod(m - i, q);
        const int di = old[static_cast<std::size_t>(i)].f.rho();
        const int dj = old[static_cast<std::size_t>(j)].f.rho();
        const int r = exact_div(m - di - j * (q + 1), q);
        const int p = exact_div(di + dj - m, q) - 1;
        CurvePoly tf = old[static_cast<std::size_t>(i)].f * CurvePoly::y_pow(C, j);
        auto mu = discrepancy(old[static_cast<std::size_t>(i)].f, r, j, *s_);
        if (!mu)
            throw WindowExhausted("iteration " + std::to_string(m) + " needs syndromes beyond the known window");
        pend.push_back({j, r, p, std::move(tf), *mu});
    }

    std::vector<KotterQuad> next = old;
    std::vector<KotterCase> cases;
    for (int i = 0; i < q; ++i) {
        const Pending& pd = pend[static_cast<std::size_t>(i)];
        const KotterQuad& qi = old[static_cast<std::size_t>(i)];
        const KotterQuad& qj = old[static_cast<std::size_t>(pd.j)];
        KotterQuad& ni = next[static_cast<std::size_t>(i)];
        if (pd.mu.is_zero()) {
            cases.push_back(KotterCase::skip);
        } else if (pd.p >= 0) {
            cases.push_back(KotterCase::reduce);
            ni.f = qi.f - pd.mu * qj.g.shifted_x(pd.p);
            ni.phi = qi.phi - pd.mu * qj.psi.shifted_x(pd.p);
        } else {
            cases.push_back(KotterCase::shift);
            const Elem inv = pd.mu.inv();
            ni.f = qi.f.shifted_x(-pd.p) - pd.mu * qj.g;
            ni.phi = qi.phi.shifted_x(-pd.p) - pd.mu * qj.psi;
            KotterQuad& nj = next[static_cast<std::size_t>(pd.j)];
            nj.g = inv * qi.f;
            nj.psi = inv * qi.phi;
        }
    }
    st_ = std::move(next);
    ++m_;

    std::vector<KotterRow> rows;
    rows.reserve(static_cast<std::size_t>(q));
    for (int i = 0; i < q; ++i) {
        Pending& pd = pend[static_cast<std::size_t>(i)];
        const KotterQuad& ni = st_[static_cast<std::size_t>(i)];
        rows.push_back({m, i, pd.j, pd.r, std::move(pd.tf), pd.mu, pd.p, cases[static_cast<std::size_t>(i)], ni.f,
                        ni.phi, ni.g, ni.psi});
    }
    return rows;
}

KotterResult kotter_solve(const HermitianCurve& curve, const SyndromeArray& s, int M)
{
    KotterSolver solver(curve, s);
    KotterResult res{{}, {}};
    for (int m = 0; m <= M; ++m) {
        auto rows = solver.step();
        for (auto& r : rows)
            res.trace.push_back(std::move(r));
    }
    res.state = solver.state();
    return res;
}

}  // namespace keyeq::hermitian
