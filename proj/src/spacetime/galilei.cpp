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

#include "symmetria/spacetime/galilei.hpp"

#include <algorithm>
#include <cmath>

#include "symmetria/errors.hpp"

namespace symmetria::spacetime {

GalileiElement::GalileiElement(const Mat3& R, const Vec3& v, const Vec3& xi, double tau)
    : R_(R), v_(v), xi_(xi), tau_(tau) {
    if (classify_rotation(R, 1e-10) != RotationClass::proper)
        throw DomainError("Galilei element needs a proper rotation");
    if (!v.allFinite() || !xi.allFinite() || !std::isfinite(tau))
        throw DomainError("Galilei parameters must be finite");
}

GalileiElement GalileiElement::identity() {
    return {Mat3::Identity(), Vec3::Zero(), Vec3::Zero(), 0.0};
}

SpacetimePoint galilei_apply(const GalileiElement& g, const SpacetimePoint& p) {
    return {p.t + g.tau(), g.R() * p.r + g.v() * p.t + g.xi()};
}

GalileiElement galilei_compose(const GalileiElement& g2, const GalileiElement& g1) {
    return {g2.R() * g1.R(), g2.R() * g1.v() + g2.v(), g2.R() * g1.xi() + g2.xi() + g2.v() * g1.tau(),
            g2.tau() + g1.tau()};
}

GalileiElement galilei_inverse(const GalileiElement& g) {
    const Mat3 Rt = g.R().transpose();
    const Vec3 v = -Rt * g.v();
    return {Rt, v, -Rt * g.xi() - v * g.tau(), -g.tau()};
}

double parameter_distance(const GalileiElement& a, const GalileiElement& b) {
    return std::max({(a.R() - b.R()).cwiseAbs().maxCoeff(), (a.v() - b.v()).cwiseAbs().maxCoeff(),
                     (a.xi() - b.xi()).cwiseAbs().maxCoeff(), std::abs(a.tau() - b.tau())});
}

}  // namespace symmetria::spacetime
