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

#include "keyeq/rs.hpp"

#include <algorithm>
#include <stdexcept>

namespace keyeq::rs {

namespace {

void require_length(const std::vector<Elem>& v, std::size_t n, const char* what)
{
    if (v.size() != n)
        throw std::invalid_argument(std::string(what) + " length " + std::to_string(v.size()) + ", expected " +
                                    std::to_string(n));
}


bool all_zero(const std::vector<Elem>& v)
{
    return std::all_of(v.begin(), v.end(), [](Elem e) { return e.is_zero(); });
}

}  // namespace

Matrix GrsCode::generator_matrix() const
{
    Matrix g(*field_, k_, n());
    for (std::size_t i = 0; i < k_; ++i)
        for (std::size_t j = 0; j < n(); ++j)
            g.set(i, j, points_[j].pow(static_cast<std::int64_t>(i)));
    return g;
}

Matrix GrsCode::check_matrix() const
{
    Matrix h(*field_, r(), n());
    for (std::size_t s = 0; s < r(); ++s)
        for (std::size_t j = 0; j < n(); ++j)
            h.set(s, j, multipliers_[j] * points_[j].pow(static_cast<std::int64_t>(s)));
    return h;
}

GrsCode make_code(std::shared_ptr<const Field> field, std::vector<Elem> points, std::size_t k,
                  std::optional<std::vector<Elem>> multipliers)
{
    if (!field)
        throw std::invalid_argument("missing field");
    const Field& f = *field;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].field() != &f)
            throw FieldMismatch();
        for (std::size_t j = 0; j < i; ++j)
            if (points[i] == points[j])
                throw std::invalid_argument("evaluation point " + points[i].to_string() + " repeated");
    }
    if (k > points.size())
        throw std::invalid_argument("dimension " + std::to_string(k) + " outside [0, " +
                                    std::to_string(points.size()) + "]");
    GrsCode code;
    code.field_ = std::move(field);
    code.k_ = k;
    if (multipliers) {
        require_length(*multipliers, points.size(), "multiplier vector");
        for (Elem b : *multipliers) {
            if (b.field() != &f)
                throw FieldMismatch();
            if (b.is_zero())
                throw std::invalid_argument("column multipliers must be nonzero");
        }
        code.multipliers_ = std::move(*multipliers);
    } else {
        for (std::size_t j = 0; j < points.size(); ++j) {
            Elem prod = f.one();
            for (std::size_t i = 0; i < points.size(); ++i)
                if (i != j)
                    prod *= points[j] - points[i];
            code.multipliers_.push_back(prod.inv());
        }
    }
    code.points_ = std::move(points);
    if (multipliers && !(code.generator_matrix() * code.check_matrix().transpose()).is_zero())
        throw std::invalid_argument("column multipliers do not give a check matrix for this code");
    return code;
}

GrsCode conventional_rs(std::shared_ptr<const Field> field, std::size_t k)
{
    if (!field)
        throw std::invalid_argument("missing field");
    std::vector<Elem> points;
    for (std::uint32_t i = 0; i + 1 < field->order(); ++i)
        points.push_back(field->exp(i));
    auto mult = points;
    GrsCode code = make_code(std::move(field), std::move(points), k, std::move(mult));
    code.conventional_ = true;
    return code;
}

std::vector<Elem> encode(const GrsCode& code, const std::vector<Elem>& message)
{
    require_length(message, code.k(), "message");
    const Field& f = code.field();
    std::vector<Elem> c(code.n(), f.zero());
    for (std::size_t j = 0; j < code.n(); ++j) {
        // Horner in the evaluation point.
        Elem acc = f.zero();
        for (std::size_t i = code.k(); i-- > 0;)
            acc = acc * code.points()[j] + message[i];
        c[j] = acc;
    }
    return c;
}

std::vector<Elem> power_sums(const std::vector<Elem>& points, const std::vector<Elem>& v, std::size_t count)
{
    require_length(v, points.size(), "vector");
    if (points.empty())
        throw std::invalid_argument("no points");
    const Field& f = *points.front().field();
    std::vector<Elem> s(count, f.zero());
    for (std::size_t j = 0; j < points.size(); ++j) {
        if (v[j].is_zero())
            continue;
        Elem term = v[j];
        for (std::size_t a = 0; a < count; ++a) {
            s[a] += term;
            term *= points[j];
        }
    }
    return s;
}

std::vector<Elem> syndromes(const GrsCode& code, const std::vector<Elem>& received)
{
    require_length(received, code.n(), "received word");
    std::vector<Elem> weighted(code.n());
    for (std::size_t j = 0; j < code.n(); ++j)
        weighted[j] = received[j] * code.multipliers()[j];
    return power_sums(code.points(), weighted, code.r());
}

const char* to_string(BmCase c)
{
    switch (c) {
    case BmCase::skip:
        return "skip";
    case BmCase::shift:
        return "shift";
    case BmCase::reduce:
        return "reduce";
    }
    return "?";
}

std::string BmStep::to_string() const
{
    return "m=" + std::to_string(m) + " d=" + std::to_string(d) + " mu=" + mu.to_string() + " p=" + std::to_string(p) +
           " case=" + rs::to_string(kase) + " f=" + f.to_string() + " g=" + g.to_string();
}

BerlekampMassey::BerlekampMassey(const Field& field, std::vector<Elem> s)
    : field_(&field),
      s_(std::move(s)),
      st_{Poly::constant(field.one()), Poly(field), Poly(field), Poly::constant(-field.one())}
{
    for (Elem e : s_)
        if (e.field() != field_)
            throw FieldMismatch();
}

BmStep BerlekampMassey::step()
{
    if (m_ >= static_cast<int>(s_.size()))
        throw std::out_of_range("no syndrome s_" + std::to_string(m_));
    const Field& F = *field_;
    const int m = m_;
    const int d = st_.f.degree();
    Elem mu = F.zero();
    for (int a = 0; a <= d; ++a) {
        const int idx = a + m - d;
        if (idx >= 0)
            mu += st_.f.coeff(a) * s_[static_cast<std::size_t>(idx)];
    }
    const int p = 2 * d - m - 1;
    BmCase kase;
    if (mu.is_zero()) {
        kase = BmCase::skip;
    } else if (p >= 0) {
        kase = BmCase::reduce;
        st_.f -= mu * st_.g.shifted(p);
        st_.phi -= mu * st_.psi.shifted(p);
    } else {
        kase = BmCase::shift;
        const Elem inv = mu.inv();
        Poly f = st_.f.shifted(-p) - mu * st_.g;
        Poly phi = st_.phi.shifted(-p) - mu * st_.psi;
        st_.g = inv * st_.f;
        st_.psi = inv * st_.phi;
        st_.f = std::move(f);
        st_.phi = std::move(phi);
    }
    ++m_;
    return {m, d, mu, p, kase, st_.f, st_.g};
}

BmResult bm_solve(const Field& field, const std::vector<Elem>& s, int r)
{
    if (r < 0 || r > static_cast<int>(s.size()))
        throw std::invalid_argument("iteration count " + std::to_string(r) + " exceeds syndrome length " +
                                    std::to_string(s.size()));
    BerlekampMassey bm(field, std::vector<Elem>(s.begin(), s.begin() + r));
    std::vector<BmStep> trace;
    trace.reserve(static_cast<std::size_t>(r));
    for (int m = 0; m < r; ++m)
        trace.push_back(bm.step());
    return {bm.state(), std::move(trace)};
}

std::vector<std::size_t> locate(const Poly& f, const GrsCode& code)
{
    if (&f.field() != &code.field())
        throw FieldMismatch();
    std::vector<std::size_t> pos;
    for (std::size_t j = 0; j < code.n(); ++j)
        if (f(code.points()[j]).is_zero())
            pos.push_back(j);
    return pos;
}

std::vector<std::optional<Elem>> forney_values(const Poly& f, const Poly& phi,
                                               const std::vector<std::size_t>& positions, const GrsCode& code)
{
    const Poly df = f.derivative();
    std::vector<std::optional<Elem>> out;
    out.reserve(positions.size());
    for (std::size_t j : positions) {
        const Elem a = code.points().at(j);
        const Elem den = df(a);
        if (den.is_zero())
            out.emplace_back(std::nullopt);
        else
            out.emplace_back(phi(a) / den);
    }
    return out;
}

std::vector<std::optional<Elem>> horiguchi_values(const Poly& f, const Poly& g,
                                                  const std::vector<std::size_t>& positions, const GrsCode& code)
{
    const Poly df = f.derivative();
    std::vector<std::optional<Elem>> out;
    out.reserve(positions.size());
    for (std::size_t j : positions) {
        const Elem a = code.points().at(j);
        const Elem den = df(a) * g(a);
        if (den.is_zero())
            out.emplace_back(std::nullopt);
        else
            out.emplace_back(den.inv());
    }
    return out;
}

namespace {

/// x^n h(1/x) for n >= deg h.
Poly reverse(const Poly& h, int n)
{
    std::vector<Field::Value> c(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i <= h.degree(); ++i)
        c[static_cast<std::size_t>(n - i)] = h.raw()[static_cast<std::size_t>(i)];
    return {h.field(), std::move(c)};
}

}  // namespace

SugiyamaResult sugiyama_solve(const Field& field, const std::vector<Elem>& s, int t_cap)
{
    if (t_cap < 0 || 2 * static_cast<std::size_t>(t_cap) > s.size())
        throw std::invalid_argument("need 2*t_cap <= number of syndromes");
    const Elem one = field.one();
    Poly r0 = Poly::monomial(one, 2 * t_cap);
    Poly r1(field, std::vector<Elem>(s.begin(), s.begin() + 2 * t_cap));
    SugiyamaResult res{Poly::constant(one), Poly(field), Poly::constant(one), Poly(field), 0};
    if (r1.is_zero())
        return res;
    // u0, u1: coefficients of R1 in the current pair of remainders.
    Poly u0(field);
    Poly u1 = Poly::constant(one);
    while (r1.degree() >= t_cap) {
        auto st = euclid_monic_step(r0, r1);
        const Elem inv = st.scale.inv();
        Poly u2 = inv * (u0 - st.quotient * u1);
        r0 = std::move(r1);
        r1 = std::move(st.remainder);
        u0 = std::move(u1);
        u1 = std::move(u2);
        ++res.steps;
        if (r1.is_zero())
            break;
    }
    const Elem c0 = u1.coeff(0);
    if (c0.is_zero())
        throw std::domain_error("Euclid locator has zero constant term");
    res.sigma = c0.inv() * u1;
    res.omega = c0.inv() * r1;
    const int t = std::max(res.sigma.degree(), res.omega.is_zero() ? 0 : res.omega.degree() + 1);
    Poly f = reverse(res.sigma, t);
    const Elem lead_inv = f.lead().inv();
    res.f = lead_inv * f;
    res.phi = res.omega.is_zero() ? Poly(field) : lead_inv * reverse(res.omega, t - 1);
    return res;
}

const char* to_string(DecodeStatus s)
{
    switch (s) {
    case DecodeStatus::success:
        return "success";
    case DecodeStatus::root_count_mismatch:
        return "root_count_mismatch";
    case DecodeStatus::repeated_root:
        return "repeated_root";
    case DecodeStatus::evaluation_failure:
        return "evaluation_failure";
    case DecodeStatus::residual_nonzero:
        return "residual_nonzero";
    }
    return "?";
}

DecodeResult decode(const GrsCode& code, const std::vector<Elem>& received, EvalMethod method)
{
    const Field& F = code.field();
    const auto s = syndromes(code, received);
    DecodeResult out{ErrorReport{{}, {}, Poly::constant(F.one()), Poly(F), Poly(F), method, DecodeStatus::success, 0},
                     received};
    ErrorReport& rep = out.report;
    if (all_zero(s))
        return out;

    const auto bm = bm_solve(F, s, static_cast<int>(s.size()));
    rep.locator = bm.state.f;
    rep.evaluator = bm.state.phi;
    rep.aux = bm.state.g;
    rep.iterations = static_cast<int>(s.size());

    const auto pos = locate(rep.locator, code);
    const Poly df = rep.locator.derivative();
    for (std::size_t j : pos)
        if (df(code.points()[j]).is_zero()) {
            rep.status = DecodeStatus::repeated_root;
            return out;
        }
    if (static_cast<int>(pos.size()) != rep.locator.degree()) {
        rep.status = DecodeStatus::root_count_mismatch;
        return out;
    }
    const auto vals = method == EvalMethod::forney ? forney_values(rep.locator, rep.evaluator, pos, code)
                                                   : horiguchi_values(rep.locator, rep.aux, pos, code);
    rep.positions = pos;
    for (std::size_t i = 0; i < pos.size(); ++i) {
        if (!vals[i] || vals[i]->is_zero()) {
            rep.status = DecodeStatus::evaluation_failure;
            rep.values.clear();
            return out;
        }
        const Elem e = *vals[i] / code.multipliers()[pos[i]];
        rep.values.push_back(e);
        out.corrected[pos[i]] -= e;
    }
    if (!all_zero(syndromes(code, out.corrected)))
        rep.status = DecodeStatus::residual_nonzero;
    return out;
}

std::pair<Poly, Poly> oracle_locator_evaluator(const std::vector<Elem>& e, const GrsCode& code)
{
    require_length(e, code.n(), "error vector");
    const Field& F = code.field();
    auto lin = [&](std::size_t j) { return Poly::x(F) - Poly::constant(code.points()[j]); };
    Poly f = Poly::constant(F.one());
    Poly phi(F);
    for (std::size_t j = 0; j < code.n(); ++j) {
        if (e[j].is_zero())
            continue;
        f *= lin(j);
        Poly term = Poly::constant(e[j]);
        for (std::size_t k = 0; k < code.n(); ++k)
            if (k != j && !e[k].is_zero())
                term *= lin(k);
        phi += term;
    }
    return {f, phi};
}

}  // namespace keyeq::rs
