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

#include <functional>
#include <span>
#include <vector>

#include "symmetria/numerics/matrix.hpp"

namespace symmetria::numerics {

/// Central-difference step and accuracy order (2 or 4).
class FDStencil {
public:
    FDStencil(double step, int order);

    static FDStencil laplacian_default() { return {1e-3, 4}; }
    static FDStencil jacobian_default() { return {1e-5, 2}; }

    double step() const noexcept { return step_; }
    int order() const noexcept { return order_; }

private:
    double step_;
    int order_;
};

using RealField = std::function<double(std::span<const double>)>;
using VectorMap = std::function<std::vector<double>(std::span<const double>)>;

/// d/dt of a scalar function of one variable.
double fd_derivative(const std::function<double(double)>& f, double t, const FDStencil& stencil);

/// d²/dt² of a scalar function of one variable.
double fd_second_derivative(const std::function<double(double)>& f, double t,
                            const FDStencil& stencil);

/// ∂u/∂x_axis at a point.
double fd_partial(const RealField& field, std::span<const double> point, std::size_t axis,
                  const FDStencil& stencil);

/// ∂²u/∂x_axis² at a point.
double fd_partial2(const RealField& field, std::span<const double> point, std::size_t axis,
                   const FDStencil& stencil);

/// Σ_l ∂²u/∂x_l². Exact on polynomials of degree ≤ order + 1 up to rounding.
double fd_laplacian(const RealField& field, std::span<const double> point,
                    const FDStencil& stencil = FDStencil::laplacian_default());

/// J(i, j) ≈ ∂map_i/∂x_j.
DenseMatrix fd_jacobian(const VectorMap& map, std::span<const double> point,
                        const FDStencil& stencil = FDStencil::jacobian_default());

/// Finite-difference weights for the `derivative`-th derivative at x0 from
/// the given nodes (Fornberg's recursion).
std::vector<double> fd_weights(double x0, std::span<const double> nodes, int derivative);

}  // namespace symmetria::numerics
