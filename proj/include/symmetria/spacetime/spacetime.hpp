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

namespace symmetria::spacetime {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Vec4 = Eigen::Vector4d;  // (x⁰, x¹, x², x³)
using Mat4 = Eigen::Matrix4d;

/// An event (t, r) in natural units (c = 1).
struct SpacetimePoint {
    double t = 0.0;
    Vec3 r = Vec3::Zero();

    Vec4 as_vector() const { return {t, r.x(), r.y(), r.z()}; }
    static SpacetimePoint from_vector(const Vec4& x) { return {x(0), x.tail<3>()}; }
};

/// Minkowski metric diag(−1, 1, 1, 1).
inline Mat4 minkowski() { return Eigen::Vector4d(-1.0, 1.0, 1.0, 1.0).asDiagonal(); }

/// η(x, x) with signature (−, +, +, +).
inline double interval(const Vec4& x) { return -x(0) * x(0) + x.tail<3>().squaredNorm(); }

inline double interval(const SpacetimePoint& p, const SpacetimePoint& q) {
    return interval(p.as_vector() - q.as_vector());
}

/// Right-handed rotation by `angle` about a unit axis.
Mat3 rotation(const Vec3& axis, double angle);

enum class RotationClass { not_orthogonal, proper, improper };

/// Checks the six orthonormality conditions on the rows of m, then the sign
/// of the determinant.
RotationClass classify_rotation(const Mat3& m, double tol = 1e-10);

const char* to_string(RotationClass c);

}  // namespace symmetria::spacetime
