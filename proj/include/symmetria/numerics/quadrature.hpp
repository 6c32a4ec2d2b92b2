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

#include <complex>
#include <functional>
#include <vector>

namespace symmetria::numerics {

enum class QuadratureKind { composite_simpson, gauss_legendre };

/// Node count and rule family. Composite Simpson needs an odd count ≥ 3.
class QuadratureRule {
public:
    QuadratureRule(QuadratureKind kind, int node_count);

    static QuadratureRule simpson(int node_count) { return {QuadratureKind::composite_simpson, node_count}; }
    static QuadratureRule gauss(int node_count) { return {QuadratureKind::gauss_legendre, node_count}; }

    QuadratureKind kind() const noexcept { return kind_; }
    int node_count() const noexcept { return node_count_; }

    /// Nodes and weights mapped to [a, b].
    void nodes_and_weights(double a, double b, std::vector<double>& nodes,
                           std::vector<double>& weights) const;

private:
    QuadratureKind kind_;
    int node_count_;
};

/// Default rule for the harmonic integral representations.
inline QuadratureRule default_rule() { return QuadratureRule::simpson(129); }

/// Gauss–Legendre nodes/weights on [−1, 1] by Newton iteration on P_n.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// ∫_a^b f(t) dt. Throws EvaluationError if f is non-finite at a node.
std::complex<double> integrate_periodic(const std::function<std::complex<double>(double)>& f,
                                        double a, double b, const QuadratureRule& rule);

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureRule& rule);

}  // namespace symmetria::numerics
