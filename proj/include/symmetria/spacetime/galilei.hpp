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

#include "symmetria/spacetime/spacetime.hpp"

namespace symmetria::spacetime {

/// G(R, v, ξ, τ): r′ = R r + v t + ξ, t′ = t + τ.
class GalileiElement {
public:
    /// Throws DomainError unless R is a proper rotation within 1e-10.
    GalileiElement(const Mat3& R, const Vec3& v, const Vec3& xi, double tau);

    static GalileiElement identity();

    const Mat3& R() const noexcept { return R_; }
    const Vec3& v() const noexcept { return v_; }
    const Vec3& xi() const noexcept { return xi_; }
    double tau() const noexcept { return tau_; }

private:
    Mat3 R_;
    Vec3 v_;
    Vec3 xi_;
    double tau_;
};

SpacetimePoint galilei_apply(const GalileiElement& g, const SpacetimePoint& p);

/// g2·g1 = (R₂R₁, R₂v₁ + v₂, R₂ξ₁ + ξ₂ + v₂τ₁, τ₂ + τ₁).
GalileiElement galilei_compose(const GalileiElement& g2, const GalileiElement& g1);

GalileiElement galilei_inverse(const GalileiElement& g);

/// Largest parameter difference between two elements.
double parameter_distance(const GalileiElement& a, const GalileiElement& b);

}  // namespace symmetria::spacetime
