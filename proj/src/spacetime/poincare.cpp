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

#include "symmetria/spacetime/poincare.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "symmetria/errors.hpp"

namespace symmetria::spacetime {

PoincareElement::PoincareElement(const Vec3& a, double b, const Vec3& v, const Mat3& R)
    : a_(a), b_(b), v_(v), R_(R) {
    if (!(v.norm() < 1.0)) throw DomainError("boost speed must satisfy |v| < 1");
    if (classify_rotation(R, 1e-10) != RotationClass::proper)
        throw DomainError("Poincare element needs a proper rotation");
    if (!a.allFinite() || !std::isfinite(b)) throw DomainError("translations must be finite");
}

PoincareElement PoincareElement::identity() {
    return {Vec3::Zero(), 0.0, Vec3::Zero(), Mat3::Identity()};
}

Mat4 boost_matrix(const Vec3& v) {
    const double v2 = v.squaredNorm();
    const double gamma = 1.0 / std::sqrt(1.0 - v2);
    Mat4 B = Mat4::Zero();
    B(0, 0) = gamma;
    B.block<1, 3>(0, 1) = -gamma * v.transpose();
    B.block<3, 1>(1, 0) = -gamma * v;
    B.block<3, 3>(1, 1) = Mat3::Identity() + (gamma * gamma / (gamma + 1.0)) * v * v.transpose();
    return B;
}

Affine5 PoincareElement::to_affine() const {
    Mat4 rot = Mat4::Identity();
    rot.block<3, 3>(1, 1) = R_;
    Affine5 m = Affine5::Identity();
    m.block<4, 4>(0, 0) = boost_matrix(v_) * rot;
    m(0, 4) = b_;
    m.block<3, 1>(1, 4) = a_;
    return m;
}

PoincareElement PoincareElement::from_affine(const Affine5& m) {
    const Mat4 lorentz = m.block<4, 4>(0, 0);
    const double gamma = lorentz(0, 0);
    const Vec3 v = -lorentz.block<3, 1>(1, 0) / gamma;
    if (!(gamma >= 1.0 - 1e-12) || !(v.norm() < 1.0)) {
        std::ostringstream os;
        os << "cannot extract a boost with |v| < 1 (gamma = " << gamma << ")";
        throw CompositionError(os.str());
    }
    const Mat4 rot = boost_matrix(-v) * lorentz;
    const Mat3 R = rot.block<3, 3>(1, 1);
    try {
        return {m.block<3, 1>(1, 4), m(0, 4), v, R};
    } catch (const DomainError& e) {
        throw CompositionError(std::string("inconsistent composition: ") + e.what());
    }
}

SpacetimePoint poincare_apply(const PoincareElement& T, const SpacetimePoint& p) {
    const Vec3 w = T.R() * p.r;
    const Vec3& v = T.v();
    const double v2 = v.squaredNorm();
    const double root = std::sqrt(1.0 - v2);
    if (std::sqrt(v2) < small_boost_speed) {
        const double gamma = 1.0 / root;
        return {T.b() + gamma * (p.t - v.dot(w)),
                T.a() + w + (gamma * gamma / (gamma + 1.0)) * v.dot(w) * v - gamma * v * p.t};
    }
    const Vec3 r = T.a() + v.cross(w).cross(v) / v2 + v / v2 * ((v.dot(w) - v2 * p.t) / root);
    const double t = T.b() + (p.t - v.dot(w)) / root;
    return {t, r};
}

PoincareElement poincare_compose(const PoincareElement& T2, const PoincareElement& T1) {
    return PoincareElement::from_affine(T2.to_affine() * T1.to_affine());
}

double parameter_distance(const PoincareElement& x, const PoincareElement& y) {
    return std::max({(x.a() - y.a()).cwiseAbs().maxCoeff(), std::abs(x.b() - y.b()),
                     (x.v() - y.v()).cwiseAbs().maxCoeff(), (x.R() - y.R()).cwiseAbs().maxCoeff()});
}

SpacetimePoint discrete_apply(DiscreteOp op, const SpacetimePoint& p) {
    switch (op) {
        case DiscreteOp::P: return {p.t, -p.r};
        case DiscreteOp::T: return {-p.t, p.r};
        case DiscreteOp::PT: return {-p.t, -p.r};
    }
    return p;
}

}  // namespace symmetria::spacetime
