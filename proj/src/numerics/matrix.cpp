/*
 * Copyright 2026 The Symmetria Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "symmetria/numerics/matrix.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "symmetria/errors.hpp"

namespace symmetria::numerics {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
    if (data_.size() != rows * cols) {
        std::ostringstream os;
        os << "expected " << rows * cols << " entries, got " << data_.size();
        throw DimensionError(os.str());
    }
    check_finite();
}

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    if (rows_ == 0 || cols_ == 0) throw DimensionError("matrix dimensions must be positive");
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw DimensionError("ragged matrix literal");
        data_.insert(data_.end(), row.begin(), row.end());
    }
    check_finite();
}

void DenseMatrix::check_finite() const {
    for (const auto& z : data_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw DomainError("matrix entries must be finite");
    }
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

DenseMatrix DenseMatrix::diagonal(std::span<const Complex> diag) {
    DenseMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    m.check_finite();
    return m;
}

DenseMatrix DenseMatrix::adjoint() const {
    DenseMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
}

DenseMatrix DenseMatrix::transpose() const {
    DenseMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

double DenseMatrix::sup_norm() const noexcept {
    double best = 0.0;
    for (const auto& z : data_) best = std::max(best, std::abs(z));
    return best;
}

bool DenseMatrix::is_diagonal(double tol) const noexcept {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && std::abs((*this)(i, j)) > tol) return false;
    return true;
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DimensionError("matrix sum shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

DenseMatrix& DenseMatrix::operator-=(const DenseMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DimensionError("matrix difference shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

DenseMatrix& DenseMatrix::operator*=(Complex s) {
    for (auto& z : data_) z *= s;
    return *this;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
    DenseMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            const Complex* brow = &b.data_[k * b.cols_];
            Complex* crow = &c.data_[i * c.cols_];
            for (std::size_t j = 0; j < b.cols_; ++j) crow[j] += aik * brow[j];
        }
    }
    return c;
}

std::vector<Complex> DenseMatrix::apply(std::span<const Complex> v) const {
    if (v.size() != cols_) throw DimensionError("matrix-vector shape mismatch");
    std::vector<Complex> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Complex acc{};
        for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return out;
}

DenseMatrix commutator(const DenseMatrix& a, const DenseMatrix& b, BracketSign sign) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
        throw DimensionError("commutator needs square matrices of equal shape");
    DenseMatrix ab = a * b;
    DenseMatrix ba = b * a;
    return sign == BracketSign::minus ? ab - ba : ab + ba;
}

double sup_distance(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("sup_distance shape mismatch");
    double best = 0.0;
    auto ea = a.entries();
    auto eb = b.entries();
    for (std::size_t i = 0; i < ea.size(); ++i) best = std::max(best, std::abs(ea[i] - eb[i]));
    return best;
}

DenseMatrix embed(const DenseMatrix& op, std::span<const std::size_t> legs,
                  std::span<const std::size_t> dims) {
    std::size_t sub = 1;
    for (auto leg : legs) {
        if (leg >= dims.size()) throw DimensionError("embed: leg index out of range");
        sub *= dims[leg];
    }
    if (op.rows() != sub || op.cols() != sub)
        throw DimensionError("embed: operator does not match the selected legs");
    std::size_t total = 1;
    for (auto d : dims) total *= d;

    const std::size_t n_legs = dims.size();
    std::vector<std::size_t> strides(n_legs, 1);
    for (std::size_t i = n_legs; i-- > 1;) strides[i - 1] = strides[i] * dims[i];

    std::vector<bool> acted(n_legs, false);
    for (auto leg : legs) acted[leg] = true;

    auto digit = [&](std::size_t index, std::size_t leg) { return (index / strides[leg]) % dims[leg]; };
    auto sub_index = [&](std::size_t index) {
        std::size_t s = 0;
        for (auto leg : legs) s = s * dims[leg] + digit(index, leg);
        return s;
    };

    DenseMatrix out(total, total);
    for (std::size_t row = 0; row < total; ++row) {
        const std::size_t r_sub = sub_index(row);
        // Columns agreeing with `row` on every passive leg.
        std::size_t base = row;
        for (auto leg : legs) base -= digit(row, leg) * strides[leg];
        for (std::size_t c_sub = 0; c_sub < sub; ++c_sub) {
            const Complex value = op(r_sub, c_sub);
            if (value == Complex{}) continue;
            std::size_t col = base;
            std::size_t rem = c_sub;
            for (std::size_t li = legs.size(); li-- > 0;) {
                const auto leg = legs[li];
                col += (rem % dims[leg]) * strides[leg];
                rem /= dims[leg];
            }
            out(row, col) = value;
        }
    }
    return out;
}

const DenseMatrix& pauli(int index) {
    using namespace std::complex_literals;
    static const std::array<DenseMatrix, 4> sigma = {
        DenseMatrix{{1.0, 0.0}, {0.0, 1.0}},
        DenseMatrix{{0.0, 1.0}, {1.0, 0.0}},
        DenseMatrix{{0.0, -1i}, {1i, 0.0}},
        DenseMatrix{{1.0, 0.0}, {0.0, -1.0}},
    };
    if (index < 0 || index > 3) throw DomainError("Pauli index must be 0..3");
    return sigma[static_cast<std::size_t>(index)];
}

}  // namespace symmetria::numerics
