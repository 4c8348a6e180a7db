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

#include "keyeq/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "keyeq/cli/examples.hpp"
#include "keyeq/cli/table.hpp"
#include "keyeq/hermitian.hpp"
#include "keyeq/rs.hpp"

namespace keyeq::cli {

using nlohmann::json;
namespace herm = keyeq::hermitian;

// ---------------------------------------------------------------------------
// Config

RunConfig RunConfig::from_json(const json& j)
{
    if (!j.is_object())
        throw UsageError("config must be a JSON object");
    RunConfig c;
    try {
        for (const auto& [key, v] : j.items()) {
            if (key == "family")
                c.family = v.get<std::string>();
            else if (key == "q")
                c.q = v.get<unsigned>();
            else if (key == "k")
                c.k = v.get<int>();
            else if (key == "m")
                c.m = v.get<int>();
            else if (key == "weight")
                c.weight = v.get<int>();
            else if (key == "positions") {
                c.positions = v.get<std::vector<std::size_t>>();
                c.random_positions = false;
            } else if (key == "values") {
                c.values = v.get<std::vector<std::string>>();
                c.random_values = false;
            } else if (key == "trials")
                c.trials = v.get<int>();
            else if (key == "seed")
                c.seed = v.get<std::uint64_t>();
            else if (key == "method")
                c.method = v.get<std::string>();
            else if (key == "trace_out")
                c.trace_out = v.get<std::string>();
            else if (key == "report_out")
                c.report_out = v.get<std::string>();
            else if (key == "timing")
                c.timing = v.get<bool>();
            else
                throw UsageError("unknown config key '" + key + "'");
        }
    } catch (const json::exception& ex) {
        throw UsageError(std::string("bad config value: ") + ex.what());
    }
    return c;
}

void RunConfig::validate() const
{
    if (family != "rs" && family != "hermitian")
        throw UsageError("family must be rs or hermitian");
    if (method != "forney" && method != "horiguchi" && method != "both")
        throw UsageError("method must be forney, horiguchi or both");
    if (trials < 0)
        throw UsageError("trials must be non-negative");
    if (weight < 0)
        throw UsageError("weight must be non-negative");
    if (family == "rs" && !k)
        throw UsageError("rs needs k");
    if (family == "hermitian" && !m)
        throw UsageError("hermitian needs m");
    if (!random_positions && positions.size() != static_cast<std::size_t>(weight))
        throw UsageError("fixed positions must list exactly weight entries");
    if (!random_values && values.size() != static_cast<std::size_t>(weight))
        throw UsageError("fixed values must list exactly weight entries");
}

// ---------------------------------------------------------------------------
// Replay

namespace {

std::string point_label(const herm::HermitianCurve& C, std::size_t k)
{
    const auto& P = C.point(k);
    return "P" + std::to_string(k + 1) + "=(" + P.x.to_string() + ", " + P.y.to_string() + ")";
}

std::string join_ints(const std::vector<int>& v)
{
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + std::to_string(v[i]);
    return s + "}";
}

}  // namespace

int cmd_replay(const std::string& name, std::ostream& out)
{
    const WorkedExample& ex = example_by_name(name);
    const auto curve = herm::HermitianCurve::build(3);
    const herm::HermitianCurve& C = *curve;
    const Field& F = C.field();
    const int q = C.q();
    const auto e = example_error(C, ex);
    std::vector<std::string> diffs;

    out << "example " << ex.name << ": q=" << q << " over GF(" << F.order() << "), errors";
    for (const auto& [k, v] : ex.errors)
        out << " " << point_label(C, k) << ":" << F.parse(v);
    out << "\n";

    const int width = ex.last_iteration + 2 * q * q;
    const auto S = herm::syndrome_array(C, e, width);
    const auto res = herm::kotter_solve(C, S, ex.last_iteration);
    for (const auto& row : res.trace)
        out << row.to_string() << "\n";

    for (auto& d : compare_table(C, parse_table(ex.table), res.trace))
        diffs.push_back("table " + d);

    std::vector<herm::CurvePoly> fs, phis, gs;
    for (const auto& st : res.state) {
        fs.push_back(st.f);
        phis.push_back(st.phi);
        gs.push_back(st.g);
    }
    auto pin = [&](const char* what, const std::vector<std::string>& want, const std::vector<herm::CurvePoly>& got) {
        for (std::size_t i = 0; i < want.size(); ++i) {
            const auto w = herm::CurvePoly::parse(C, want[i]);
            if (!(w == got[i]))
                diffs.push_back(std::string(what) + std::to_string(i) + ": expected " + w.to_string() + ", got " +
                                got[i].to_string());
        }
    };
    pin("f", ex.locators, fs);
    pin("phi", ex.evaluators, phis);
    pin("g", ex.aux, gs);

    for (int i = 0; i < q; ++i)
        out << "f" << i << " = " << fs[static_cast<std::size_t>(i)] << "\n";
    for (int i = 0; i < q; ++i)
        out << "phi" << i << " = " << phis[static_cast<std::size_t>(i)] << "\n";
    for (int i = 0; i < q; ++i)
        out << "g" << i << " = " << gs[static_cast<std::size_t>(i)] << "\n";

    const auto fp = herm::footprint_from_locators(C, fs);
    const auto oracle = herm::footprint_oracle(C, e);
    const int bound = herm::termination_bound(oracle, q);
    out << "footprint " << join_ints(fp.delta) << ", sigma " << join_ints(fp.sigma) << ", bound " << bound << "\n";
    if (fp.delta != ex.footprint || oracle.delta != ex.footprint)
        diffs.push_back("footprint: expected " + join_ints(ex.footprint) + ", solver " + join_ints(fp.delta) +
                        ", oracle " + join_ints(oracle.delta));
    if (fp.sigma != oracle.sigma)
        diffs.push_back("sigma: solver " + join_ints(fp.sigma) + ", oracle " + join_ints(oracle.sigma));
    if (bound != ex.last_iteration)
        diffs.push_back("termination bound " + std::to_string(bound) + ", expected " +
                        std::to_string(ex.last_iteration));

    const auto pos = herm::locate_errors(C, fs);
    std::vector<std::size_t> want_pos;
    for (const auto& [k, v] : ex.errors)
        want_pos.push_back(k);
    out << "positions:";
    for (std::size_t k : pos)
        out << " " << point_label(C, k);
    out << "\n";
    if (pos != want_pos)
        diffs.push_back("error positions differ");

    // Forney with every locator that has a simple zero, and Horiguchi.
    const auto hv = herm::horiguchi_values(C, fs, gs, pos);
    for (std::size_t t = 0; t < pos.size(); ++t) {
        const Elem want = e[pos[t]];
        out << "P" << pos[t] + 1 << ":";
        for (int i = 0; i < q; ++i) {
            const auto v = herm::forney_values(C, fs[static_cast<std::size_t>(i)], phis[static_cast<std::size_t>(i)],
                                               {pos[t]})[0];
            out << " forney(f" << i << ")=" << (v ? v->to_string() : "not simple");
            if (v && *v != want)
                diffs.push_back("forney(f" + std::to_string(i) + ") at P" + std::to_string(pos[t] + 1));
        }
        out << " horiguchi=" << (hv[t] ? hv[t]->to_string() : "undefined") << "\n";
        if (!hv[t] || *hv[t] != want)
            diffs.push_back("horiguchi at P" + std::to_string(pos[t] + 1));
    }

    // End to end: the same error on the zero word of the code with check rows up to the bound.
    for (EvalMethod method : {EvalMethod::forney, EvalMethod::horiguchi}) {
        const auto dr = herm::decode(C, ex.last_iteration, e, method);
        if (dr.report.status != herm::DecodeStatus::success ||
            std::any_of(dr.corrected.begin(), dr.corrected.end(), [](Elem x) { return !x.is_zero(); }))
            diffs.push_back(std::string("decode with ") + to_string(method) + ": " + to_string(dr.report.status));
    }

    if (diffs.empty()) {
        out << "result: OK\n";
        return kOk;
    }
    for (const auto& d : diffs)
        out << "mismatch: " << d << "\n";
    out << "result: MISMATCH (" << diffs.size() << ")\n";
    return kMismatch;
}

// ---------------------------------------------------------------------------
// Simulate

namespace {

struct Trial {
    bool correctable = false;
    bool success = true;
    bool agree = true;
    int iterations = 0;
    std::size_t corrections = 0;
    std::string status;
};

std::vector<Elem> make_error(const Field& F, std::size_t n, const RunConfig& cfg, std::mt19937_64& rng)
{
    std::vector<Elem> e(n, F.zero());
    std::vector<std::size_t> pos;
    if (cfg.random_positions) {
        std::vector<std::size_t> idx(n);
        for (std::size_t i = 0; i < n; ++i)
            idx[i] = i;
        for (int t = 0; t < cfg.weight; ++t) {
            const std::size_t j = static_cast<std::size_t>(t) + rng() % (n - static_cast<std::size_t>(t));
            std::swap(idx[static_cast<std::size_t>(t)], idx[j]);
            pos.push_back(idx[static_cast<std::size_t>(t)]);
        }
    } else {
        pos = cfg.positions;
    }
    for (std::size_t t = 0; t < pos.size(); ++t) {
        if (pos[t] >= n)
            throw UsageError("error position " + std::to_string(pos[t]) + " outside the code length");
        e[pos[t]] = cfg.random_values ? F.element(static_cast<Field::Value>(1 + rng() % (F.order() - 1)))
                                      : F.parse(cfg.values[t]);
    }
    return e;
}

std::vector<Elem> random_message(const Field& F, std::size_t k, std::mt19937_64& rng)
{
    std::vector<Elem> msg(k);
    for (auto& x : msg)
        x = F.element(static_cast<Field::Value>(rng() % F.order()));
    return msg;
}

std::vector<EvalMethod> methods_of(const std::string& m)
{
    if (m == "forney")
        return {EvalMethod::forney};
    if (m == "horiguchi")
        return {EvalMethod::horiguchi};
    return {EvalMethod::forney, EvalMethod::horiguchi};
}

std::size_t nonzero_count(const std::vector<Elem>& v)
{
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Elem x) { return !x.is_zero(); }));
}

}  // namespace

int cmd_simulate(const RunConfig& cfg, std::ostream& out)
{
    cfg.validate();
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(cfg.seed);
    const auto methods = methods_of(cfg.method);

    std::ofstream trace;
    if (!cfg.trace_out.empty()) {
        trace.open(cfg.trace_out);
        if (!trace)
            throw UsageError("cannot open trace file '" + cfg.trace_out + "'");
    }

    json rep;
    rep["family"] = cfg.family;
    rep["q"] = cfg.q;
    rep["seed"] = cfg.seed;
    rep["trials"] = cfg.trials;
    rep["weight"] = cfg.weight;
    rep["method"] = cfg.method;

    std::vector<Trial> trials;
    trials.reserve(static_cast<std::size_t>(std::max(cfg.trials, 0)));

    if (cfg.family == "rs") {
        std::shared_ptr<const Field> field;
        try {
            field = Field::of_order(cfg.q);
        } catch (const std::invalid_argument& ex) {
            throw UsageError(ex.what());
        }
        const int n = static_cast<int>(field->order()) - 1;
        if (*cfg.k < 1 || *cfg.k >= n)
            throw UsageError("k must satisfy 1 <= k < " + std::to_string(n));
        if (cfg.weight > n)
            throw UsageError("weight exceeds the code length");
        const auto code = rs::conventional_rs(field, static_cast<std::size_t>(*cfg.k));
        rep["n"] = code.n();
        rep["k"] = code.k();
        const bool correctable = 2 * static_cast<std::size_t>(cfg.weight) <= code.r();
        for (int t = 0; t < cfg.trials; ++t) {
            const auto cw = rs::encode(code, random_message(*field, code.k(), rng));
            const auto e = make_error(*field, code.n(), cfg, rng);
            std::vector<Elem> u(cw.size());
            for (std::size_t j = 0; j < u.size(); ++j)
                u[j] = cw[j] + e[j];
            Trial tr;
            tr.correctable = correctable;
            std::optional<std::vector<Elem>> first;
            for (EvalMethod mth : methods) {
                const auto dr = rs::decode(code, u, mth);
                const bool ok = dr.report.status == rs::DecodeStatus::success && dr.corrected == cw;
                tr.success = tr.success && ok;
                tr.iterations = dr.report.iterations;
                tr.status = rs::to_string(dr.report.status);
                tr.corrections = dr.report.positions.size();
                if (first && *first != dr.corrected)
                    tr.agree = false;
                first = dr.corrected;
            }
            if (trace)
                trace << "trial=" << t << " weight=" << nonzero_count(e) << " status=" << tr.status
                      << " success=" << tr.success << " agree=" << tr.agree << "\n";
            trials.push_back(tr);
        }
    } else {
        std::shared_ptr<const herm::HermitianCurve> curve;
        try {
            curve = herm::HermitianCurve::build(static_cast<int>(cfg.q));
        } catch (const std::invalid_argument& ex) {
            throw UsageError(ex.what());
        }
        const herm::HermitianCurve& C = *curve;
        Matrix G(C.field(), 0, C.n());
        try {
            G = herm::code_generator_matrix(C, *cfg.m);
        } catch (const std::invalid_argument& ex) {
            throw UsageError(ex.what());
        }
        if (static_cast<std::size_t>(cfg.weight) > C.n())
            throw UsageError("weight exceeds the code length");
        rep["n"] = C.n();
        rep["m"] = *cfg.m;
        rep["dimension"] = G.rows();
        for (int t = 0; t < cfg.trials; ++t) {
            const auto cw = herm::encode(G, random_message(C.field(), G.rows(), rng));
            const auto e = make_error(C.field(), C.n(), cfg, rng);
            std::vector<Elem> u(cw.size());
            for (std::size_t j = 0; j < u.size(); ++j)
                u[j] = cw[j] + e[j];
            Trial tr;
            tr.correctable = herm::termination_bound(herm::footprint_oracle(C, e), C.q()) <= *cfg.m ||
                             nonzero_count(e) == 0;
            std::optional<std::vector<Elem>> first;
            for (EvalMethod mth : methods) {
                const auto dr = herm::decode(C, *cfg.m, u, mth);
                const bool ok = dr.report.status == herm::DecodeStatus::success && dr.corrected == cw;
                tr.success = tr.success && ok;
                tr.iterations = dr.report.iterations;
                tr.status = herm::to_string(dr.report.status);
                tr.corrections = dr.report.positions.size();
                if (first && *first != dr.corrected)
                    tr.agree = false;
                first = dr.corrected;
            }
            if (trace)
                trace << "trial=" << t << " weight=" << nonzero_count(e) << " status=" << tr.status
                      << " success=" << tr.success << " agree=" << tr.agree << "\n";
            trials.push_back(tr);
        }
    }

    std::size_t ok = 0, agree = 0, correctable = 0, bad = 0, corrections = 0;
    long long iters = 0;
    std::map<std::string, int> statuses;
    for (const auto& tr : trials) {
        ok += tr.success;
        agree += tr.agree;
        correctable += tr.correctable;
        corrections += tr.corrections;
        iters += tr.iterations;
        ++statuses[tr.status];
        if (tr.correctable && (!tr.success || !tr.agree))
            ++bad;
    }
    const double nt = trials.empty() ? 1.0 : static_cast<double>(trials.size());
    rep["success_rate"] = trials.empty() ? 1.0 : static_cast<double>(ok) / nt;
    if (methods.size() > 1)
        rep["agreement_rate"] = trials.empty() ? 1.0 : static_cast<double>(agree) / nt;
    rep["correctable_trials"] = correctable;
    rep["corrections"] = corrections;
    rep["mean_iterations"] = trials.empty() ? 0.0 : static_cast<double>(iters) / nt;
    rep["status_counts"] = statuses;
    if (cfg.timing)
        rep["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    const std::string text = rep.dump(2) + "\n";
    out << text;
    if (!cfg.report_out.empty()) {
        std::ofstream f(cfg.report_out);
        if (!f)
            throw UsageError("cannot open report file '" + cfg.report_out + "'");
        f << text;
    }
    return bad == 0 ? kOk : kMismatch;
}

// ---------------------------------------------------------------------------
// Inspect

namespace {

int to_int(const std::string& s, const char* what)
{
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used == s.size())
            return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("bad ") + what + " '" + s + "'");
}

std::string coords(const Field& F, Elem a)
{
    // a as a polynomial in the generator, highest power first.
    std::string s;
    Field::Value v = a.value();
    const unsigned p = F.characteristic();
    std::vector<unsigned> d;
    for (unsigned i = 0; i < F.degree(); ++i, v /= p)
        d.push_back(v % p);
    for (unsigned i = F.degree(); i-- > 0;) {
        if (d[i] == 0)
            continue;
        if (!s.empty())
            s += " + ";
        const std::string mono = i == 0 ? "" : (i == 1 ? "a" : "a^" + std::to_string(i));
        if (mono.empty())
            s += std::to_string(d[i]);
        else
            s += (d[i] == 1 ? "" : std::to_string(d[i])) + mono;
    }
    return s.empty() ? "0" : s;
}

void inspect_field(const std::vector<std::string>& params, std::ostream& out)
{
    if (params.size() != 2)
        throw UsageError("inspect field needs p and m");
    std::shared_ptr<const Field> F;
    try {
        F = Field::make(static_cast<unsigned>(to_int(params[0], "p")), static_cast<unsigned>(to_int(params[1], "m")));
    } catch (const std::invalid_argument& ex) {
        throw UsageError(ex.what());
    }
    out << "GF(" << F->order() << "), modulus";
    const auto& mod = F->modulus();
    for (std::size_t i = 0; i < mod.size(); ++i)
        out << " " << mod[i];
    out << " (ascending)\n";
    for (std::uint32_t k = 0; k + 1 < F->order(); ++k) {
        const Elem a = F->exp(k);
        out << "a^" << k << " = " << coords(*F, a) << "  [" << a.value() << "]\n";
    }
}

void inspect_curve(const std::vector<std::string>& params, std::ostream& out)
{
    if (params.size() != 1)
        throw UsageError("inspect curve needs q");
    std::shared_ptr<const herm::HermitianCurve> C;
    try {
        C = herm::HermitianCurve::build(to_int(params[0], "q"));
    } catch (const std::invalid_argument& ex) {
        throw UsageError(ex.what());
    }
    out << "x^" << C->q() + 1 << " = y^" << C->q() << " + y over GF(" << C->field().order() << "), " << C->n()
        << " points, genus " << C->genus() << "\n";
    for (std::size_t k = 0; k < C->n(); ++k)
        out << point_label(*C, k) << "\n";
}

void inspect_code(const std::vector<std::string>& params, std::ostream& out)
{
    if (params.size() != 3)
        throw UsageError("inspect code needs: rs <q> <k> | hermitian <q> <m>");
    if (params[0] == "rs") {
        std::shared_ptr<const Field> F;
        try {
            F = Field::of_order(static_cast<std::uint32_t>(to_int(params[1], "q")));
        } catch (const std::invalid_argument& ex) {
            throw UsageError(ex.what());
        }
        const int k = to_int(params[2], "k");
        if (k < 1 || k >= static_cast<int>(F->order()) - 1)
            throw UsageError("k out of range");
        const auto code = rs::conventional_rs(F, static_cast<std::size_t>(k));
        out << "RS over GF(" << F->order() << "): n=" << code.n() << " k=" << code.k() << " r=" << code.r() << "\n";
        out << "points:";
        for (Elem a : code.points())
            out << " " << a;
        out << "\n";
        auto dump = [&](const char* name, const Matrix& M) {
            out << name << ":\n";
            for (std::size_t i = 0; i < M.rows(); ++i) {
                for (std::size_t j = 0; j < M.cols(); ++j)
                    out << (j ? " " : "  ") << M.at(i, j);
                out << "\n";
            }
        };
        dump("G", code.generator_matrix());
        dump("H", code.check_matrix());
        return;
    }
    if (params[0] != "hermitian")
        throw UsageError("code family must be rs or hermitian");
    std::shared_ptr<const herm::HermitianCurve> C;
    std::vector<int> orders;
    try {
        C = herm::HermitianCurve::build(to_int(params[1], "q"));
        orders = herm::check_row_orders(*C, to_int(params[2], "m"));
    } catch (const std::invalid_argument& ex) {
        throw UsageError(ex.what());
    }
    const auto H = herm::code_check_matrix(*C, to_int(params[2], "m"));
    out << "Hermitian q=" << C->q() << " m=" << params[2] << ": n=" << C->n() << " rows=" << H.rows()
        << " dimension=" << C->n() - H.rank() << "\n";
    out << "row orders:";
    for (std::size_t i = 0; i < orders.size(); ++i)
        out << (i ? "," : " ") << orders[i];
    out << "\n";
    for (int o : orders) {
        const auto ab = C->monomial_of_order(o);
        out << "  " << o << ": x^" << ab->first << " y^" << ab->second << "\n";
    }
}

}  // namespace

int cmd_inspect(const std::string& target, const std::vector<std::string>& params, std::ostream& out)
{
    if (target == "field")
        inspect_field(params, out);
    else if (target == "curve")
        inspect_curve(params, out);
    else if (target == "code")
        inspect_code(params, out);
    else
        throw UsageError("inspect target must be field, curve or code");
    return kOk;
}

}  // namespace keyeq::cli
