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

#include <array>

#include "symmetria/liealg/polynomial.hpp"
#include "symmetria/sklyanin/rmatrix.hpp"

namespace symmetria::sklyanin {

/// Four d×d operators S₀..S₃ with the couplings J₁, J₂, J₃.
struct SklyaninRep {
    std::size_t dim;
    std::array<DenseMatrix, 4> S;
    std::array<double, 3> J;

    /// 𝐉_{βγ} = −(J_β − J_γ)/J_α for the cyclic triple starting at α (0-based).
    double coupling(std::size_t alpha) const;
};

/// S₀ = 1, S_α = σ_α.
SklyaninRep rep2();

/// The three-dimensional representation; DomainError unless all J > 0.
SklyaninRep rep3(double J1, double J2, double J3);

struct SklyaninResiduals {
    double first;   // [S_α, S₀] + i𝐉_{βγ}[S_β, S_γ]₊
    double second;  // [S_α, S_β] − i[S₀, S_γ]₊
    double max() const { return first > second ? first : second; }
};

SklyaninResiduals sklyanin_residuals(const SklyaninRep& rep);
double sklyanin_residual(const SklyaninRep& rep);

/// Largest |A − A†| over the four operators.
double self_adjointness_residual(const SklyaninRep& rep);

/// L(u) = σ₀⊗S₀ + Σ W_α(u) σ_α⊗S_α, auxiliary leg first.
DenseMatrix L_operator(double u, const SklyaninRep& rep, const QuantumRParams& p);

/// sup |R(u−v)L′(u)L″(v) − L″(v)L′(u)R(u−v)| on aux ⊗ aux ⊗ quantum.
double rll_residual(double u, double v, const SklyaninRep& rep, const QuantumRParams& p);

/// Couplings J (normalized to J₁ = 1) whose 𝐉_{αβ} match the curve constants
/// of (η, k) measured at u_ref. DomainError if they are not all positive.
std::array<double, 3> rep3_couplings_from_curve(const QuantumRParams& p, double u_ref = 0.37);

using Rational = liealg::Rational;
using Poly4 = liealg::Polynomial<Rational, 4>;
using Bivector4 = liealg::PoissonBivector<Rational, 4>;

struct PoissonTensorSpec {
    std::array<Rational, 4> a;
    std::array<Rational, 4> b;
};

/// ε_{ijkl} with ε₀₁₂₃ = +1.
int levi_civita4(std::size_t i, std::size_t j, std::size_t k, std::size_t l);

/// {x_k, x_l} = Σ_{i<j} ε_{klij}(a_i b_j − b_i a_j) x_i x_j.
Bivector4 poisson_tensor(const PoissonTensorSpec& spec);

struct JacobiReport {
    bool antisymmetric;
    std::size_t triples_checked;
    std::size_t failures;  // triples with a nonzero jacobiator
};

JacobiReport poisson_jacobi_check(const Bivector4& lambda);

/// The bracket written out for b = (0,1,1,1), a = (1, a₁, a₂, a₃).
Bivector4 sklyanin_bracket_reference(const Rational& a1, const Rational& a2, const Rational& a3);

/// Number of table entries where two bivectors differ.
std::size_t bivector_mismatches(const Bivector4& x, const Bivector4& y);

}  // namespace symmetria::sklyanin
