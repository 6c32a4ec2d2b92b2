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
#include <string>
#include <variant>

#include "symmetria/numerics/finite_difference.hpp"
#include "symmetria/spacetime/spacetime.hpp"

namespace symmetria::spacetime {

/// Points closer than this (in |η(y, y)|) to an excluded null cone are rejected.
inline constexpr double null_cone_margin = 1e-8;

/// Dilation x ↦ k x (k > 0) or inversion x ↦ (p − x) / η(p − x, p − x).
class ConformalMap {
public:
    struct Dilation {
        double k;
    };
    struct Inversion {
        Vec4 pivot;
    };

    static ConformalMap dilation(double k);
    static ConformalMap inversion(const Vec4& pivot = Vec4::Zero());

    bool is_dilation() const noexcept { return std::holds_alternative<Dilation>(kind_); }
    const std::variant<Dilation, Inversion>& kind() const noexcept { return kind_; }

    /// Forward map M₁ → M₂. Throws DomainError on the pivot's null cone.
    Vec4 apply(const Vec4& x) const;

    /// Inverse map M₂ → M₁. Throws DomainError on the origin's null cone.
    Vec4 apply_inverse(const Vec4& y) const;

private:
    explicit ConformalMap(std::variant<Dilation, Inversion> kind) : kind_(kind) {}
    std::variant<Dilation, Inversion> kind_;
};

struct PullbackFit {
    double omega;          // √(fitted Ω²)
    double omega_squared;  // least-squares scalar against η
    double residual;       // sup |metric − Ω² η|
};

/// Metric induced on the target M₂ at point y: Jᵀ η J with J the Jacobian of
/// the inverse map at y, fitted against Ω² η.
PullbackFit conformal_pullback_check(
    const ConformalMap& map, const Vec4& y,
    const numerics::FDStencil& stencil = numerics::FDStencil::jacobian_default());

/// A scalar Ω(x) used to rescale the flat metric.
struct ConformalFactor {
    std::string name;
    std::function<double(const Vec4&)> omega;
    bool needs_null_cone_check = false;

    static ConformalFactor constant(double c);
    /// Ω = (x·x)⁻¹.
    static ConformalFactor inverse_interval();
    static ConformalFactor custom(std::string name, std::function<double(const Vec4&)> omega);
};

/// Default step for the nested Riemann differencing.
inline constexpr double riemann_step = 1e-2;

/// Riemann tensor R^a_{bcd} of Ω² η at x by nested central differences
/// (Christoffels from ∂g, then ∂Γ), Richardson-extrapolated one level.
/// Components are indexed [a][b][c][d].
std::array<double, 256> riemann_tensor(const ConformalFactor& factor, const Vec4& x,
                                       double step = riemann_step);

/// max |R^a_{bcd}| of the rescaled metric.
double conformal_flatness_check(const ConformalFactor& factor, const Vec4& x,
                                double step = riemann_step);

/// □ = η^{ab} ∂_a ∂_b by central differences.
double fd_dalembertian(const std::function<double(const Vec4&)>& field, const Vec4& x,
                       const numerics::FDStencil& stencil = numerics::FDStencil::laplacian_default());

/// |(□ + m²)(φ∘D_k)(x) − k²·((□ + m²)φ)(k x)|. Zero for every k when m = 0.
double dalembert_dilation_check(double k, const std::function<double(const Vec4&)>& field,
                                const Vec4& x, double mass = 0.0,
                                const numerics::FDStencil& stencil = numerics::FDStencil::laplacian_default());

}  // namespace symmetria::spacetime
