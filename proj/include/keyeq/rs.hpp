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

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "keyeq/eval_method.hpp"
#include "keyeq/galois.hpp"
#include "keyeq/matrix.hpp"
#include "keyeq/poly.hpp"

namespace keyeq::rs {

/**
 * Generalized Reed-Solomon code.
 *
 * Codewords are message * G with G the k x n Vandermonde matrix on the
 * evaluation points. The parity-check matrix H has rows
 * (b_j a_j^s) for 0 <= s < n-k, where b_j are the column multipliers, so a
 * received word u has syndromes s_s = sum_j u_j b_j a_j^s. The decoder
 * therefore sees the weighted error e_j b_j, and divides by b_j at the end.
 */
class GrsCode {
public:
    const Field& field() const { return *field_; }
    const std::shared_ptr<const Field>& field_ptr() const { return field_; }
    const std::vector<Elem>& points() const { return points_; }
    const std::vector<Elem>& multipliers() const { return multipliers_; }
    std::size_t n() const { return points_.size(); }
    std::size_t k() const { return k_; }
    std::size_t r() const { return points_.size() - k_; }
    bool conventional() const { return conventional_; }

    Matrix generator_matrix() const;
    Matrix check_matrix() const;

private:
    friend GrsCode make_code(std::shared_ptr<const Field>, std::vector<Elem>, std::size_t,
                             std::optional<std::vector<Elem>>);
    friend GrsCode conventional_rs(std::shared_ptr<const Field>, std::size_t);

    std::shared_ptr<const Field> field_;
    std::vector<Elem> points_;
    std::vector<Elem> multipliers_;
    std::size_t k_ = 0;
    bool conventional_ = false;
};

/**
 * GRS code on distinct points. Without explicit multipliers they are
 * b_j = prod_(i != j) (a_j - a_i)^(-1), which makes H a check matrix for G.
 * Explicit multipliers are validated against G * H^T = 0.
 */
GrsCode make_code(std::shared_ptr<const Field> field, std::vector<Elem> points, std::size_t k,
                  std::optional<std::vector<Elem>> multipliers = std::nullopt);

/// Points g^0, ..., g^(q-2) and multipliers b_j = a_j.
GrsCode conventional_rs(std::shared_ptr<const Field> field, std::size_t k);

std::vector<Elem> encode(const GrsCode& code, const std::vector<Elem>& message);

/// Unweighted power sums sum_j v_j a_j^s for 0 <= s < count.
std::vector<Elem> power_sums(const std::vector<Elem>& points, const std::vector<Elem>& v, std::size_t count);

/// s_0 .. s_(r-1) of a received word (multiplier-weighted power sums).
std::vector<Elem> syndromes(const GrsCode& code, const std::vector<Elem>& received);

// ---------------------------------------------------------------------------
// Berlekamp-Massey

enum class BmCase { skip, shift, reduce };

const char* to_string(BmCase c);

struct BmQuad {
    Poly f, phi, g, psi;
};

struct BmStep {
    int m = 0;
    int d = 0;
    Elem mu;
    int p = 0;
    BmCase kase = BmCase::skip;
    Poly f;  ///< after the update
    Poly g;

    /// "m=<m> d=<d> mu=<elt> p=<p> case=<tag> f=<poly> g=<poly>"
    std::string to_string() const;
};

/// Stepper over a syndrome sequence; state() after step m is iteration m+1.
class BerlekampMassey {
public:
    BerlekampMassey(const Field& field, std::vector<Elem> s);

    int iteration() const { return m_; }
    const BmQuad& state() const { return st_; }
    /// Runs iteration m; throws std::out_of_range once the syndromes run out.
    BmStep step();

private:
    const Field* field_;
    std::vector<Elem> s_;
    int m_ = 0;
    BmQuad st_;
};

struct BmResult {
    BmQuad state;
    std::vector<BmStep> trace;
};

/// r iterations of Berlekamp-Massey on s_0 .. s_(r-1).
BmResult bm_solve(const Field& field, const std::vector<Elem>& s, int r);

// ---------------------------------------------------------------------------
// Location and evaluation. Values are returned in the syndrome domain, i.e.
// as e_j b_j; decode() removes the multipliers.

std::vector<std::size_t> locate(const Poly& f, const GrsCode& code);

/// phi(a_j) / f'(a_j); nullopt where f'(a_j) = 0.
std::vector<std::optional<Elem>> forney_values(const Poly& f, const Poly& phi,
                                               const std::vector<std::size_t>& positions, const GrsCode& code);

/// (f'(a_j) g(a_j))^(-1); nullopt where the product vanishes.
std::vector<std::optional<Elem>> horiguchi_values(const Poly& f, const Poly& g,
                                                  const std::vector<std::size_t>& positions, const GrsCode& code);

// ---------------------------------------------------------------------------
// Euclid / Sugiyama

struct SugiyamaResult {
    Poly sigma;  ///< sigma(0) = 1
    Poly omega;
    Poly f;      ///< monic locator in the x^T sigma(1/x) convention
    Poly phi;    ///< matching evaluator, f S = phi
    int steps = 0;
};

/// Euclid on x^(2t) and s_0 + ... + s_(2t-1) x^(2t-1) until the remainder has degree < t.
SugiyamaResult sugiyama_solve(const Field& field, const std::vector<Elem>& s, int t_cap);

// ---------------------------------------------------------------------------
// Decoding

using keyeq::EvalMethod;
enum class DecodeStatus { success, root_count_mismatch, repeated_root, evaluation_failure, residual_nonzero };

const char* to_string(DecodeStatus s);

struct ErrorReport {
    std::vector<std::size_t> positions;
    std::vector<Elem> values;  ///< error values e_j, parallel to positions
    Poly locator;
    Poly evaluator;
    Poly aux;  ///< g from the final Berlekamp-Massey state
    EvalMethod method = EvalMethod::forney;
    DecodeStatus status = DecodeStatus::success;
    int iterations = 0;
};

struct DecodeResult {
    ErrorReport report;
    std::vector<Elem> corrected;
};

DecodeResult decode(const GrsCode& code, const std::vector<Elem>& received, EvalMethod method = EvalMethod::forney);

/// f^e = prod (x - a_j) and phi^e = sum e_j prod_(k != j) (x - a_k) over supp(e).
std::pair<Poly, Poly> oracle_locator_evaluator(const std::vector<Elem>& e, const GrsCode& code);

}  // namespace keyeq::rs
