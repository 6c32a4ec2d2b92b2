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

#include "symmetria/numerics/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "symmetria/errors.hpp"

namespace symmetria::numerics {

QuadratureRule::QuadratureRule(QuadratureKind kind, int node_count)
    : kind_(kind), node_count_(node_count) {
    if (node_count < 3) throw DomainError("quadrature needs at least 3 nodes");
    if (kind == QuadratureKind::composite_simpson && node_count % 2 == 0)
        throw DomainError("composite Simpson needs an odd node count");
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(static_cast<std::size_t>(n), 0.0);
    weights.assign(static_cast<std::size_t>(n), 0.0);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // Refresh the derivative at the converged root.
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[static_cast<std::size_t>(i)] = -x;
        nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        weights[static_cast<std::size_t>(i)] = w;
        weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
}

void QuadratureRule::nodes_and_weights(double a, double b, std::vector<double>& nodes,
                                       std::vector<double>& weights) const {
    const auto n = static_cast<std::size_t>(node_count_);
    if (kind_ == QuadratureKind::composite_simpson) {
        nodes.resize(n);
        weights.resize(n);
        const double h = (b - a) / static_cast<double>(n - 1);
        for (std::size_t i = 0; i < n; ++i) {
            nodes[i] = a + h * static_cast<double>(i);
            double w = (i == 0 || i == n - 1) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
            weights[i] = w * h / 3.0;
        }
        return;
    }
    gauss_legendre(node_count_, nodes, weights);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    for (std::size_t i = 0; i < n; ++i) {
        nodes[i] = mid + half * nodes[i];
        weights[i] *= half;
    }
}

std::complex<double> integrate_periodic(const std::function<std::complex<double>(double)>& f,
                                        double a, double b, const QuadratureRule& rule) {
    if (!(b > a)) throw DomainError("integration interval must satisfy b > a");
    std::vector<double> nodes;
    std::vector<double> weights;
    rule.nodes_and_weights(a, b, nodes, weights);
    std::complex<double> sum{};
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const auto value = f(nodes[i]);
        if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
            std::ostringstream os;
            os << "integrand is not finite at node t = " << nodes[i];
            throw EvaluationError(os.str(), nodes[i]);
        }
        sum += weights[i] * value;
    }
    return sum;
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureRule& rule) {
    return integrate_periodic([&](double t) { return std::complex<double>(f(t), 0.0); }, a, b, rule)
        .real();
}

}  // namespace symmetria::numerics
