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

#include <string>
#include <vector>

#include "keyeq/hermitian/curve_poly.hpp"
#include "keyeq/hermitian/syndrome.hpp"

namespace keyeq::hermitian {

/// Per-class solver data (f_i, phi_i, g_i, psi_i).
struct KotterQuad {
    CurvePoly f, phi, g, psi;
};

enum class KotterCase { skip, shift, reduce };

const char* to_string(KotterCase c);

/// One (m, i) row of the iteration trace; polynomials are after the update.
struct KotterRow {
    int m;
    int i;
    int j;
    int r;
    CurvePoly tf;
    Elem mu;
    int p;
    KotterCase kase;
    CurvePoly f, phi, g, psi;

    /// "m=<m> i=<i> j=<j> r=<r> tf=<poly> mu=<elt> p=<p> f=<poly> phi=<poly> g=<poly> psi=<poly>"
    std::string to_string() const;
};

/**
 * Koetter's q parallel Berlekamp-Massey recursions on a syndrome table.
 *
 * Starts from (y^i, 0, 0, -zeta*_i). Iteration m processes every i with
 * j = (m - i) mod q; all updates of one iteration read the state as it was
 * before the iteration and are committed together.
 */
class KotterSolver {
public:
    KotterSolver(const HermitianCurve& curve, const SyndromeArray& s);

    /// Next iteration to run; state() holds superscript iteration().
    int iteration() const { return m_; }
    const std::vector<KotterQuad>& state() const { return st_; }

    /// Runs iteration m and returns its q trace rows. Throws WindowExhausted
    /// (leaving the state untouched) when a needed syndrome is unknown.
    std::vector<KotterRow> step();

private:
    const HermitianCurve* curve_;
    const SyndromeArray* s_;
    int m_ = 0;
    std::vector<KotterQuad> st_;
};

struct KotterResult {
    std::vector<KotterQuad> state;  ///< superscript M + 1
    std::vector<KotterRow> trace;
};

/// Iterations 0 .. M inclusive.
KotterResult kotter_solve(const HermitianCurve& curve, const SyndromeArray& s, int M);

/// Initial state (y^i, 0, 0, -zeta*_i).
std::vector<KotterQuad> kotter_initial_state(const HermitianCurve& curve);

}  // namespace keyeq::hermitian
