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

#include "symmetria/hopf/planck.hpp"

#include <algorithm>
#include <cmath>

#include "symmetria/errors.hpp"
#include "symmetria/numerics/finite_difference.hpp"

namespace symmetria::hopf {

namespace {

constexpr int stencil_width = 9;  // order 8
constexpr double max_exponent = 700.0;

}  // namespace

DenseMatrix derivative_matrix(const std::vector<double>& grid) {
    const int n = static_cast<int>(grid.size());
    if (n < stencil_width) throw DimensionError("grid too small for the derivative stencil");
    DenseMatrix d(grid.size(), grid.size());
    for (int i = 0; i < n; ++i) {
        const int start = std::clamp(i - stencil_width / 2, 0, n - stencil_width);
        const std::span<const double> nodes(grid.data() + start, stencil_width);
        const auto w = numerics::fd_weights(grid[static_cast<std::size_t>(i)], nodes, 1);
        for (int k = 0; k < stencil_width; ++k)
            d(static_cast<std::size_t>(i), static_cast<std::size_t>(start + k)) = w[static_cast<std::size_t>(k)];
    }
    return d;
}

GridOperatorPair planck_scale_ops(int n, double half_length, double hbar, double l) {
    if (n < 64) throw ParameterError("Planck-scale grid needs at least 64 points");
    if (!(half_length > 0.0) || !(hbar > 0.0) || !(l > 0.0))
        throw ParameterError("L, hbar and l must be positive");
    if (half_length / l > max_exponent) throw ParameterError("exp(-x/l) overflows on this grid (L/l too large)");

    GridOperatorPair ops{n, half_length, hbar, l, {}, DenseMatrix(1, 1), DenseMatrix(1, 1), DenseMatrix(1, 1)};
    const double h = ops.spacing();
    for (int i = 0; i < n; ++i) ops.grid.push_back(-half_length + h * i);
    std::vector<Complex> x(ops.grid.begin(), ops.grid.end()), e;
    for (double xi : ops.grid) e.emplace_back(std::exp(-xi / l));
    ops.X = DenseMatrix::diagonal(x);
    ops.E = DenseMatrix::diagonal(e);

    ops.P = derivative_matrix(ops.grid);
    for (std::size_t i = 0; i < ops.grid.size(); ++i) {
        const Complex scale = Complex(0.0, -hbar) * (1.0 - e[i]);
        for (std::size_t j = 0; j < ops.grid.size(); ++j) ops.P(i, j) *= scale;
    }
    return ops;
}

std::vector<std::vector<Complex>> probe_vectors(const GridOperatorPair& ops) {
    const double L = ops.half_length;
    std::vector<std::vector<Complex>> probes;
    auto gaussian = [&](double centre, double width, double wavenumber) {
        std::vector<Complex> v;
        for (double x : ops.grid) {
            const double u = (x - centre) / width;
            v.push_back(std::exp(-0.5 * u * u) * std::polar(1.0, wavenumber * x));
        }
        return v;
    };
    probes.push_back(gaussian(0.0, 0.2 * L, 0.0));
    probes.push_back(gaussian(-0.15 * L, 0.15 * L, 0.0));
    probes.push_back(gaussian(0.1 * L, 0.2 * L, 1.5 / ops.l));
    return probes;
}

double planck_commutator_residual(const GridOperatorPair& ops) {
    double worst = 0.0;
    for (const auto& v : probe_vectors(ops)) {
        const auto xp = ops.X.apply(ops.P.apply(v));
        const auto px = ops.P.apply(ops.X.apply(v));
        for (std::size_t i = ops.interior_begin(); i < ops.interior_end(); ++i) {
            const Complex expected = Complex(0.0, ops.hbar) * (1.0 - ops.E(i, i)) * v[i];
            worst = std::max(worst, std::abs(xp[i] - px[i] - expected));
        }
    }
    return worst;
}

double planck_coproduct_residual(const GridOperatorPair& ops) {
    const std::size_t n = ops.grid.size();
    const auto probes = probe_vectors(ops);
    // Row-major vec: (A ⊗ B) vec(V) = vec(A V Bᵀ). X, E are diagonal and P is
    // banded, so every product keeps the sparse factor on the left: V Bᵀ = (B Vᵀ)ᵀ.
    auto delta_x = [&](const DenseMatrix& v) { return ops.X * v + (ops.X * v.transpose()).transpose(); };
    auto delta_p = [&](const DenseMatrix& v) {
        return (ops.E * (ops.P * v).transpose()).transpose() + (ops.P * v.transpose()).transpose();
    };

    double worst = 0.0;
    for (std::size_t a = 0; a < probes.size(); ++a) {
        const auto& f = probes[a];
        const auto& g = probes[(a + 1) % probes.size()];
        DenseMatrix v(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) v(i, j) = f[i] * g[j];
        const auto lhs = delta_x(delta_p(v)) - delta_p(delta_x(v));
        for (std::size_t i = ops.interior_begin(); i < ops.interior_end(); ++i)
            for (std::size_t j = ops.interior_begin(); j < ops.interior_end(); ++j) {
                const Complex expected = Complex(0.0, ops.hbar) * (1.0 - ops.E(i, i) * ops.E(j, j)) * v(i, j);
                worst = std::max(worst, std::abs(lhs(i, j) - expected));
            }
    }
    return worst;
}

}  // namespace symmetria::hopf
