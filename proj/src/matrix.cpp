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

#include "keyeq/matrix.hpp"

#include <stdexcept>

namespace keyeq {

void Matrix::set(std::size_t i, std::size_t j, Elem e)
{
    if (e.field() != field_)
        throw FieldMismatch();
    v_[i * cols_ + j] = e.value();
}

std::vector<Elem> Matrix::row(std::size_t i) const
{
    std::vector<Elem> r;
    r.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j)
        r.push_back(at(i, j));
    return r;
}

void Matrix::append_row(const std::vector<Elem>& r)
{
    if (r.size() != cols_)
        throw std::invalid_argument("row length mismatch");
    for (Elem e : r) {
        if (e.field() != field_)
            throw FieldMismatch();
        v_.push_back(e.value());
    }
    ++rows_;
}

Matrix Matrix::transpose() const
{
    Matrix t(*field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t.raw(j, i) = raw(i, j);
    return t;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.field_ != b.field_)
        throw FieldMismatch();
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("matrix shapes do not conform");
    const Field& f = *a.field_;
    Matrix c(f, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Field::Value x = a.raw(i, k);
            if (x == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                c.raw(i, j) = f.add(c.raw(i, j), f.mul(x, b.raw(k, j)));
        }
    return c;
}

bool Matrix::is_zero() const
{
    for (Field::Value x : v_)
        if (x != 0)
            return false;
    return true;
}

std::vector<Elem> Matrix::left_mul(const std::vector<Elem>& v) const
{
    if (v.size() != rows_)
        throw std::invalid_argument("vector length does not match row count");
    std::vector<Field::Value> acc(cols_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        if (v[i].field() != field_)
            throw FieldMismatch();
        if (v[i].is_zero())
            continue;
        for (std::size_t j = 0; j < cols_; ++j)
            acc[j] = field_->add(acc[j], field_->mul(v[i].value(), raw(i, j)));
    }
    std::vector<Elem> out;
    out.reserve(cols_);
    for (Field::Value x : acc)
        out.emplace_back(*field_, x);
    return out;
}

std::vector<Elem> Matrix::right_mul(const std::vector<Elem>& v) const
{
    if (v.size() != cols_)
        throw std::invalid_argument("vector length does not match column count");
    std::vector<Elem> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Field::Value acc = 0;
        for (std::size_t j = 0; j < cols_; ++j) {
            if (v[j].field() != field_)
                throw FieldMismatch();
            acc = field_->add(acc, field_->mul(raw(i, j), v[j].value()));
        }
        out.emplace_back(*field_, acc);
    }
    return out;
}

std::vector<std::size_t> Matrix::reduce()
{
    const Field& f = *field_;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t piv = r;
        while (piv < rows_ && raw(piv, c) == 0)
            ++piv;
        if (piv == rows_)
            continue;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap(raw(r, j), raw(piv, j));
        const Field::Value inv = f.inv(raw(r, c));
        for (std::size_t j = 0; j < cols_; ++j)
            raw(r, j) = f.mul(raw(r, j), inv);
        for (std::size_t i = 0; i < rows_; ++i) {
            const Field::Value x = raw(i, c);
            if (i == r || x == 0)
                continue;
            for (std::size_t j = 0; j < cols_; ++j)
                raw(i, j) = f.sub(raw(i, j), f.mul(x, raw(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t Matrix::rank() const
{
    Matrix m = *this;
    return m.reduce().size();
}

Matrix Matrix::null_space() const
{
    Matrix m = *this;
    const auto pivots = m.reduce();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots)
        is_pivot[c] = true;
    const Field& f = *field_;
    Matrix basis(f, 0, cols_);
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Elem> v(cols_, f.zero());
        v[free] = f.one();
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = Elem(f, f.neg(m.raw(r, free)));
        basis.append_row(v);
    }
    return basis;
}

bool RowBasis::insert(const std::vector<Elem>& v)
{
    if (v.size() != cols_)
        throw std::invalid_argument("vector length mismatch");
    const Field& f = *field_;
    std::vector<Field::Value> w;
    w.reserve(cols_);
    for (Elem e : v) {
        if (e.field() != field_)
            throw FieldMismatch();
        w.push_back(e.value());
    }
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Field::Value x = w[pivots_[r]];
        if (x == 0)
            continue;
        for (std::size_t j = 0; j < cols_; ++j)
            w[j] = f.sub(w[j], f.mul(x, rows_[r][j]));
    }
    std::size_t p = 0;
    while (p < cols_ && w[p] == 0)
        ++p;
    if (p == cols_)
        return false;
    const Field::Value inv = f.inv(w[p]);
    for (auto& x : w)
        x = f.mul(x, inv);
    // Keep earlier rows reduced against the new pivot.
    for (auto& row : rows_) {
        const Field::Value x = row[p];
        if (x == 0)
            continue;
        for (std::size_t j = 0; j < cols_; ++j)
            row[j] = f.sub(row[j], f.mul(x, w[j]));
    }
    rows_.push_back(std::move(w));
    pivots_.push_back(p);
    return true;
}

}  // namespace keyeq
