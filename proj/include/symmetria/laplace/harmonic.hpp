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
#include <functional>
#include <span>
#include <vector>

#include "symmetria/numerics/finite_difference.hpp"
#include "symmetria/numerics/quadrature.hpp"

namespace symmetria::laplace {

/// A real field on R^n, given as a closure. Must be stateless.
struct ScalarField {
    int dimension;
    std::function<double(std::span<const double>)> evaluate;

    double operator()(std::span<const double> x) const { return evaluate(x); }
};

/// Surface measure of the unit sphere bounding the unit ball in R^n (2π for n = 2, 4π for n = 3).
double unit_sphere_measure(int n);

/// Fundamental solution as a function of the distance r from the source.
double gamma(int n, double r);

/// γ(|x − source|) as a field.
ScalarField fundamental_solution(int n, std::vector<double> source);

/// −∮ ∂_r u dS over the sphere of the given radius centred at the origin.
/// Angular integrals use Gauss-Legendre with `nodes` points per angle.
double outward_flux(const ScalarField& u, double radius, int nodes);

/// Flux of the fundamental solution; equals 1 for every radius.
double flux_through_sphere(int n, double radius, int nodes = 24);

/// v(x) = r^{-(n-2)} u(x / r²). Evaluating v at the origin throws SingularPointError.
ScalarField kelvin_invert(const ScalarField& u, int n);

/// u = 1 − a + a/r on R³ \ {0}.
double exterior_family(double a, double r);
ScalarField exterior_field(double a);

struct RegularityProbe {
    bool regular;
    double spread;  // largest change of the field while |x| shrinks from 1e-3 to 1e-7
};

/// Probes whether a field stays bounded and settles as x → 0 along a few rays.
RegularityProbe probe_regular_at_origin(const ScalarField& v);

/// Σ k_l², the principal symbol of the Laplacian.
double symbol(std::span<const double> k);

enum class PolarCoords { polar2d, spherical3d };

/// Laplacian in polar (r, φ) or spherical (r, θ, φ) coordinates by nested finite
/// differences of the field pulled back to those coordinates.
double polar_laplacian(PolarCoords coords, const ScalarField& u, std::span<const double> point,
                       const numerics::FDStencil& stencil = numerics::FDStencil::laplacian_default());

/// Cartesian position of a polar/spherical tuple.
std::vector<double> to_cartesian(PolarCoords coords, std::span<const double> point);

}  // namespace symmetria::laplace
