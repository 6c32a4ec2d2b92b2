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

#include <cmath>

#include "symmetria/errors.hpp"
#include "symmetria/spacetime/spacetime.hpp"

namespace symmetria::spacetime {

Mat3 rotation(const Vec3& axis, double angle) {
    const double n = axis.norm();
    if (!(n > 0.0)) throw DomainError("rotation axis must be nonzero");
    return Eigen::AngleAxisd(angle, axis / n).toRotationMatrix();
}

RotationClass classify_rotation(const Mat3& m, double tol) {
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
    // g(α,α) = g(β,β) = g(γ,γ) = 1 and g(α,β) = g(α,γ) = g(β,γ) = 0 for the rows.
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            const double g = m.row(i).dot(m.row(j));
            const double expected = i == j ? 1.0 : 0.0;
            if (std::abs(g - expected) > tol) return RotationClass::not_orthogonal;
        }
    return m.determinant() > 0.0 ? RotationClass::proper : RotationClass::improper;
}

const char* to_string(RotationClass c) {
    switch (c) {
        case RotationClass::not_orthogonal: return "not_orthogonal";
        case RotationClass::proper: return "proper";
        case RotationClass::improper: return "improper";
    }
    return "unknown";
}

}  // namespace symmetria::spacetime
