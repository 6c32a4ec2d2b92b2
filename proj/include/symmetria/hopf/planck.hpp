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

#include <vector>

#include "symmetria/numerics/matrix.hpp"

namespace symmetria::hopf {

using numerics::Complex;
using numerics::DenseMatrix;

/// Position and momentum on a uniform grid over [−L, L] realizing
/// [x, p] = iħ(1 − e^{−x/l}) with P = −iħ(1 − e^{−X/l}) D.
struct GridOperatorPair {
    int n;
    double half_length;
    double hbar;
    double l;
    std::vector<double> grid;
    DenseMatrix X;
    DenseMatrix P;
    DenseMatrix E;  // e^{−X/l}

    double spacing() const { return 2.0 * half_length / (n - 1); }
    /// Rows checked against continuum identities: [n/4, 3n/4].
    std::size_t interior_begin() const { return static_cast<std::size_t>(n / 4); }
    std::size_t interior_end() const { return static_cast<std::size_t>(3 * n / 4) + 1; }
};

/// First-derivative matrix: order-8 central differences, one-sided closures
/// of the same width near the boundary.
DenseMatrix derivative_matrix(const std::vector<double>& grid);

/// Requires n ≥ 64, positive L, ħ, l. ParameterError if e^{±L/l} overflows.
GridOperatorPair planck_scale_ops(int n, double half_length, double hbar, double l);

/// Smooth probe vectors used for the operator identities: Gaussians at a few
/// centres and widths, plus a modulated one.
std::vector<std::vector<Complex>> probe_vectors(const GridOperatorPair& ops);

/// max over probes and interior rows of |([X,P] − iħ(1 − E))v|.
double planck_commutator_residual(const GridOperatorPair& ops);

/// Same check for Δ(x), Δ(p) on the tensor-square grid, using probes that are
/// products of single-grid probes; both indices restricted to the interior.
double planck_coproduct_residual(const GridOperatorPair& ops);

}  // namespace symmetria::hopf
