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

#include "symmetria/numerics/finite_difference.hpp"

#include <cmath>

#include "symmetria/errors.hpp"

namespace symmetria::numerics {

FDStencil::FDStencil(double step, int order) : step_(step), order_(order) {
    if (!(step > 0.0) || !std::isfinite(step)) throw DomainError("stencil step must be positive");
    if (order != 2 && order != 4) throw DomainError("stencil order must be 2 or 4");
}

double fd_derivative(const std::function<double(double)>& f, double t, const FDStencil& s) {
    const double h = s.step();
    if (s.order() == 2) return (f(t + h) - f(t - h)) / (2.0 * h);
    return (-f(t + 2 * h) + 8.0 * f(t + h) - 8.0 * f(t - h) + f(t - 2 * h)) / (12.0 * h);
}

double fd_second_derivative(const std::function<double(double)>& f, double t, const FDStencil& s) {
    const double h = s.step();
    if (s.order() == 2) return (f(t + h) - 2.0 * f(t) + f(t - h)) / (h * h);
    return (-f(t + 2 * h) + 16.0 * f(t + h) - 30.0 * f(t) + 16.0 * f(t - h) - f(t - 2 * h)) /
           (12.0 * h * h);
}

namespace {

std::function<double(double)> along_axis(const RealField& field, std::span<const double> point,
                                         std::size_t axis) {
    if (axis >= point.size()) throw DimensionError("axis out of range");
    std::vector<double> base(point.begin(), point.end());
    return [&field, base, axis](double t) mutable {
        std::vector<double> x = base;
        x[axis] = t;
        return field(x);
    };
}

}  // namespace

double fd_partial(const RealField& field, std::span<const double> point, std::size_t axis,
                  const FDStencil& stencil) {
    return fd_derivative(along_axis(field, point, axis), point[axis], stencil);
}

double fd_partial2(const RealField& field, std::span<const double> point, std::size_t axis,
                   const FDStencil& stencil) {
    return fd_second_derivative(along_axis(field, point, axis), point[axis], stencil);
}

double fd_laplacian(const RealField& field, std::span<const double> point, const FDStencil& stencil) {
    double sum = 0.0;
    for (std::size_t l = 0; l < point.size(); ++l) sum += fd_partial2(field, point, l, stencil);
    return sum;
}

DenseMatrix fd_jacobian(const VectorMap& map, std::span<const double> point, const FDStencil& stencil) {
    const std::size_t n = point.size();
    if (n == 0) throw DimensionError("empty point");
    std::vector<double> x(point.begin(), point.end());
    const std::size_t m = map(x).size();
    DenseMatrix jac(m, n);
    const double h = stencil.step();
    for (std::size_t j = 0; j < n; ++j) {
        auto shifted = [&](double offset) {
            std::vector<double> y = x;
            y[j] += offset;
            auto out = map(y);
            if (out.size() != m) throw DimensionError("map changed output dimension");
            return out;
        };
        if (stencil.order() == 2) {
            const auto fp = shifted(h);
            const auto fm = shifted(-h);
            for (std::size_t i = 0; i < m; ++i) jac(i, j) = (fp[i] - fm[i]) / (2.0 * h);
        } else {
            const auto f2p = shifted(2 * h);
            const auto fp = shifted(h);
            const auto fm = shifted(-h);
            const auto f2m = shifted(-2 * h);
            for (std::size_t i = 0; i < m; ++i)
                jac(i, j) = (-f2p[i] + 8.0 * fp[i] - 8.0 * fm[i] + f2m[i]) / (12.0 * h);
        }
    }
    return jac;
}

std::vector<double> fd_weights(double x0, std::span<const double> nodes, int derivative) {
    const int n = static_cast<int>(nodes.size()) - 1;
    const int m = derivative;
    if (n < m) throw DomainError("not enough nodes for the requested derivative");
    // c[j][k]: weight of node j for the k-th derivative.
    std::vector<std::vector<double>> c(static_cast<std::size_t>(n + 1),
                                       std::vector<double>(static_cast<std::size_t>(m + 1), 0.0));
    double c1 = 1.0;
    double c4 = nodes[0] - x0;
    c[0][0] = 1.0;
    for (int i = 1; i <= n; ++i) {
        const int mn = std::min(i, m);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = nodes[static_cast<std::size_t>(i)] - x0;
        for (int j = 0; j < i; ++j) {
            const double c3 = nodes[static_cast<std::size_t>(i)] - nodes[static_cast<std::size_t>(j)];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k)
                    c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for (int k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    std::vector<double> w(static_cast<std::size_t>(n + 1));
    for (int j = 0; j <= n; ++j) w[static_cast<std::size_t>(j)] = c[j][m];
    return w;
}

}  // namespace symmetria::numerics
