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

#include <cmath>
#include <numbers>

#include "symmetria/cli/suites.hpp"
#include "symmetria/spacetime/galilei.hpp"
#include "symmetria/spacetime/poincare.hpp"

namespace symmetria::cli::sampling {

using spacetime::Mat3;
using spacetime::Vec3;
using spacetime::Vec4;

inline Vec3 box3(SuiteContext& ctx, double half) {
    const double x = ctx.uniform(-half, half);
    const double y = ctx.uniform(-half, half);
    const double z = ctx.uniform(-half, half);
    return {x, y, z};
}

inline Vec4 box4(SuiteContext& ctx, double half) {
    const double t = ctx.uniform(-half, half);
    const Vec3 r = box3(ctx, half);
    return {t, r.x(), r.y(), r.z()};
}

// Uniform direction via z and azimuth.
inline Vec3 unit3(SuiteContext& ctx) {
    const double z = ctx.uniform(-1.0, 1.0);
    const double phi = ctx.uniform(0.0, 2.0 * std::numbers::pi);
    const double s = std::sqrt(1.0 - z * z);
    return {s * std::cos(phi), s * std::sin(phi), z};
}

inline Mat3 rotation(SuiteContext& ctx) {
    const Vec3 axis = unit3(ctx);
    const double angle = ctx.uniform(-std::numbers::pi, std::numbers::pi);
    return spacetime::rotation(axis, angle);
}

inline spacetime::SpacetimePoint event(SuiteContext& ctx, double half = 2.0) {
    return spacetime::SpacetimePoint::from_vector(box4(ctx, half));
}

inline spacetime::GalileiElement galilei(SuiteContext& ctx) {
    const Mat3 R = rotation(ctx);
    const Vec3 v = box3(ctx, 1.0);
    const Vec3 xi = box3(ctx, 1.0);
    const double tau = ctx.uniform(-1.0, 1.0);
    return {R, v, xi, tau};
}

// Speeds stay below 0.9 so that γ remains moderate.
inline spacetime::PoincareElement poincare(SuiteContext& ctx) {
    const Vec3 a = box3(ctx, 1.0);
    const double b = ctx.uniform(-1.0, 1.0);
    const Vec3 dir = unit3(ctx);
    const double speed = ctx.uniform(0.0, 0.9);
    const Mat3 R = rotation(ctx);
    return {a, b, speed * dir, R};
}

}  // namespace symmetria::cli::sampling
