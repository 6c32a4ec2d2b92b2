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

#include <Eigen/Dense>

#include "symmetria/spacetime/spacetime.hpp"

namespace symmetria::spacetime {

using Affine5 = Eigen::Matrix<double, 5, 5>;

/// T(a, b, v, R) = T(a,0,0,1) T(0,b,0,1) T(0,0,v,1) T(0,0,0,R): rotate, boost,
/// then translate.
class PoincareElement {
public:
    /// Throws DomainError unless |v| < 1 and R is a proper rotation within 1e-10.
    PoincareElement(const Vec3& a, double b, const Vec3& v, const Mat3& R);

    static PoincareElement identity();

    const Vec3& a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    const Vec3& v() const noexcept { return v_; }
    const Mat3& R() const noexcept { return R_; }

    /// Homogeneous 5×5 matrix acting on (t, r, 1).
    Affine5 to_affine() const;

    /// Re-extracts (a, b, v, R) following the factorization convention. Throws
    /// CompositionError if the time column implies |v| ≥ 1.
    static PoincareElement from_affine(const Affine5& m);

private:
    Vec3 a_;
    double b_;
    Vec3 v_;
    Mat3 R_;
};

/// Below this speed the boost switches from the literal 1/v² form to the
/// algebraically equal regular form.
inline constexpr double small_boost_speed = 1e-8;

/// 4×4 Lorentz boost on (t, r) for velocity v.
Mat4 boost_matrix(const Vec3& v);

SpacetimePoint poincare_apply(const PoincareElement& T, const SpacetimePoint& p);

/// The element whose action is T2∘T1, via the affine embedding.
PoincareElement poincare_compose(const PoincareElement& T2, const PoincareElement& T1);

double parameter_distance(const PoincareElement& x, const PoincareElement& y);

enum class DiscreteOp { P, T, PT };

/// P: r → −r; T: t → −t; PT: both.
SpacetimePoint discrete_apply(DiscreteOp op, const SpacetimePoint& p);

}  // namespace symmetria::spacetime
