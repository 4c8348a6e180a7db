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
#include <vector>

#include "keyeq/galois.hpp"

namespace keyeq {

/// Dense row-major matrix over a finite field.
class Matrix {
public:
    Matrix(const Field& field, std::size_t rows, std::size_t cols)
        : field_(&field), rows_(rows), cols_(cols), v_(rows * cols, 0)
    {
    }

    const Field& field() const { return *field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem at(std::size_t i, std::size_t j) const { return {*field_, v_[i * cols_ + j]}; }
    void set(std::size_t i, std::size_t j, Elem e);
    Field::Value raw(std::size_t i, std::size_t j) const { return v_[i * cols_ + j]; }
    Field::Value& raw(std::size_t i, std::size_t j) { return v_[i * cols_ + j]; }

    std::vector<Elem> row(std::size_t i) const;
    void append_row(const std::vector<Elem>& r);

    Matrix transpose() const;
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    bool is_zero() const;

    /// Row vector times matrix.
    std::vector<Elem> left_mul(const std::vector<Elem>& v) const;
    /// Matrix times column vector.
    std::vector<Elem> right_mul(const std::vector<Elem>& v) const;

    std::size_t rank() const;
    /// Basis of {x : A x = 0}, one vector per row of the result.
    Matrix null_space() const;

private:
    /// Reduced row echelon form in place; returns pivot columns.
    std::vector<std::size_t> reduce();

    const Field* field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Field::Value> v_;
};

/**
 * Incremental rank test: keeps a reduced basis and reports whether each new
 * vector is independent of those inserted before.
 */
class RowBasis {
public:
    RowBasis(const Field& field, std::size_t cols) : field_(&field), cols_(cols) {}

    /// Inserts v if independent; returns whether it was.
    bool insert(const std::vector<Elem>& v);
    std::size_t size() const { return rows_.size(); }

private:
    const Field* field_;
    std::size_t cols_;
    std::vector<std::vector<Field::Value>> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace keyeq
