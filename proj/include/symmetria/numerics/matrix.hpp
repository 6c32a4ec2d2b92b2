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

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace symmetria::numerics {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Entries are finite on construction.
class DenseMatrix {
public:
    DenseMatrix(std::size_t rows, std::size_t cols);
    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    DenseMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static DenseMatrix identity(std::size_t n);
    static DenseMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    static DenseMatrix diagonal(std::span<const Complex> diag);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const Complex> entries() const noexcept { return data_; }

    DenseMatrix adjoint() const;
    DenseMatrix transpose() const;

    /// Maximum absolute entry.
    double sup_norm() const noexcept;
    bool is_diagonal(double tol = 0.0) const noexcept;

    DenseMatrix& operator+=(const DenseMatrix& other);
    DenseMatrix& operator-=(const DenseMatrix& other);
    DenseMatrix& operator*=(Complex s);

    friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
    friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
    friend DenseMatrix operator*(DenseMatrix a, Complex s) { return a *= s; }
    friend DenseMatrix operator*(Complex s, DenseMatrix a) { return a *= s; }
    friend DenseMatrix operator-(DenseMatrix a) { return a *= -1.0; }
    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);

    std::vector<Complex> apply(std::span<const Complex> v) const;

private:
    void check_finite() const;

    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex> data_;
};

enum class BracketSign { minus, plus };

/// Kronecker product: block (i,j) of the result is a(i,j)·b.
DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);

/// AB − BA or AB + BA.
DenseMatrix commutator(const DenseMatrix& a, const DenseMatrix& b,
                       BracketSign sign = BracketSign::minus);

/// Sup-norm of a − b.
double sup_distance(const DenseMatrix& a, const DenseMatrix& b);

/// Lift an operator acting on the tensor factors `legs` (in that order) of a
/// multi-leg space with factor dimensions `dims` to the full space. The
/// remaining legs carry the identity.
DenseMatrix embed(const DenseMatrix& op, std::span<const std::size_t> legs,
                  std::span<const std::size_t> dims);

/// Pauli matrices; index 0 is the 2×2 identity.
const DenseMatrix& pauli(int index);

}  // namespace symmetria::numerics
