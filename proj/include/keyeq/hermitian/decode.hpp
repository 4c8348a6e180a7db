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
#include <optional>
#include <vector>

#include "keyeq/eval_method.hpp"
#include "keyeq/hermitian/curve_poly.hpp"
#include "keyeq/hermitian/footprint.hpp"
#include "keyeq/matrix.hpp"

namespace keyeq::hermitian {

/// Indices k with f_i(P_k) = 0 for every i.
std::vector<std::size_t> locate_errors(const HermitianCurve& curve, const std::vector<CurvePoly>& locators);

/// phi(P_k) / f'(P_k) per point; nullopt where f'(P_k) = 0.
std::vector<std::optional<Elem>> forney_values(const HermitianCurve& curve, const CurvePoly& f,
                                               const CurvePoly& phi, const std::vector<std::size_t>& points);

/// (sum_i f_i'(P_k) g_i(P_k))^-1 per point; nullopt where the sum vanishes.
std::vector<std::optional<Elem>> horiguchi_values(const HermitianCurve& curve, const std::vector<CurvePoly>& f,
                                                  const std::vector<CurvePoly>& g,
                                                  const std::vector<std::size_t>& points);

/// Orders of the rows of the check matrix for order m: semigroup elements <= m
/// realised by x^a y^b with a < q^2, b < q. Throws std::invalid_argument,
/// naming the nearest valid orders, when m is not in the semigroup.
std::vector<int> check_row_orders(const HermitianCurve& curve, int m);

/// Rows ev(x^a y^b) for the orders of check_row_orders, ascending.
Matrix code_check_matrix(const HermitianCurve& curve, int m);

/// Basis of the code {c : H c = 0} as rows.
Matrix code_generator_matrix(const HermitianCurve& curve, int m);

std::vector<Elem> encode(const Matrix& generator, const std::vector<Elem>& message);

enum class DecodeStatus { success, window_exhausted, root_count_mismatch, evaluation_failure, residual_nonzero };

const char* to_string(DecodeStatus s);

struct ErrorReport {
    std::vector<std::size_t> positions;
    std::vector<Elem> values;  ///< parallel to positions
    std::vector<CurvePoly> locators;
    std::vector<CurvePoly> evaluators;
    std::vector<CurvePoly> aux;  ///< g_i from the final solver state
    FootprintReport footprint;   ///< as implied by the locators' orders
    int bound = 0;               ///< termination bound implied by the footprint
    EvalMethod method = EvalMethod::forney;
    DecodeStatus status = DecodeStatus::success;
    int iterations = 0;
};

struct DecodeResult {
    ErrorReport report;
    std::vector<Elem> corrected;
};

/**
 * Decodes a received word of the code with check rows up to order m.
 *
 * Runs the solver for iterations 0 .. m (all the syndromes the word reveals),
 * then checks that the termination bound implied by the resulting locators is
 * within reach before locating and evaluating.
 */
DecodeResult decode(const HermitianCurve& curve, int m, const std::vector<Elem>& received,
                    EvalMethod method = EvalMethod::forney);

}  // namespace keyeq::hermitian
