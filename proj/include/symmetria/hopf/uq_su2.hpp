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

#include <string>
#include <vector>

#include "symmetria/numerics/fit.hpp"
#include "symmetria/numerics/matrix.hpp"

namespace symmetria::hopf {

using numerics::Complex;
using numerics::DenseMatrix;

/// [n]_q = (qⁿ − q⁻ⁿ)/(q − q⁻¹); equals n at q = 1.
double q_number(double n, double q);

/// Spin-j representation of U_q(su₂) on the basis |j⟩, |j−1⟩, …, |−j⟩.
class UqSu2Rep {
public:
    /// two_j ∈ {1, 2, 3, 4}; q > 0 and q ≠ 1 (ParameterError otherwise).
    UqSu2Rep(int two_j, double q);

    /// The undeformed su₂ representation (q = 1).
    static UqSu2Rep classical(int two_j);

    int two_j() const noexcept { return two_j_; }
    double q() const noexcept { return q_; }
    std::size_t dimension() const noexcept { return static_cast<std::size_t>(two_j_ + 1); }

    const DenseMatrix& H() const noexcept { return h_; }
    const DenseMatrix& Xp() const noexcept { return xp_; }
    const DenseMatrix& Xm() const noexcept { return xm_; }

    /// q^{s H} as a diagonal matrix.
    DenseMatrix q_power_H(double s) const;

private:
    UqSu2Rep(int two_j, double q, bool allow_classical);
    int two_j_;
    double q_;
    DenseMatrix h_, xp_, xm_;
};

/// q^{s·D} for a diagonal D. Throws DomainError if D is not diagonal.
DenseMatrix diagonal_power(const DenseMatrix& d, double q, double s);

struct RelationResiduals {
    double h_xp;    // [H, X₊] − 2X₊
    double h_xm;    // [H, X₋] + 2X₋
    double xp_xm;   // [X₊, X₋] − (q^H − q^{−H})/(q − q⁻¹)
    double max() const;
};

/// Residuals of the defining relations for any diagonal H and ladder pair.
RelationResiduals relation_residuals(const DenseMatrix& H, const DenseMatrix& Xp, const DenseMatrix& Xm, double q);

RelationResiduals relation_residuals(const UqSu2Rep& rep);

/// Coproduct images on V ⊗ V.
struct CoproductRep {
    DenseMatrix H, Xp, Xm;
};

CoproductRep coproduct_rep(const UqSu2Rep& rep);

/// Undeformed coproduct X ⊗ 1 + 1 ⊗ X of the given matrices.
CoproductRep primitive_coproduct(const UqSu2Rep& rep);

enum class Generator { H, Xp, Xm };

std::string to_string(Generator g);

/// max |(Δ⊗id)Δ(g) − (id⊗Δ)Δ(g)| on V⊗V⊗V. The q^{H/2} legs of the outer
/// coproduct are formed as q^{Δ(H)/2}.
double coassociativity_residual(const UqSu2Rep& rep, Generator g);

/// A basis element of the algebra as seen in a representation.
struct Letter {
    std::string name;
    DenseMatrix matrix;
    Complex counit;
    DenseMatrix antipode;
};

/// Δ(g) as a sum of pure tensors c · (left ⊗ right).
struct TensorTerm {
    Complex coefficient;
    Letter left;
    Letter right;
};

/// Antipode scalars: S(X±) = s± X±.
struct AntipodeConvention {
    Complex s_plus;
    Complex s_minus;
};

/// S(X±) = −q^{±1} X±.
AntipodeConvention standard_antipode(double q);

std::vector<TensorTerm> coproduct_terms(const UqSu2Rep& rep, Generator g, const AntipodeConvention& s);

struct CounitAntipodeResiduals {
    double counit_left;     // (ε⊗id)Δ(g) − g
    double counit_right;    // (id⊗ε)Δ(g) − g
    double antipode_left;   // m(S⊗id)Δ(g) − ε(g)·1
    double antipode_right;  // m(id⊗S)Δ(g) − ε(g)·1
    double max() const;
};

CounitAntipodeResiduals counit_antipode_check(const UqSu2Rep& rep, Generator g,
                                              const AntipodeConvention& s);

/// Solves m(S⊗id)Δ(X±) = 0 and m(id⊗S)Δ(X±) = 0 for the scalars s± by least
/// squares. Returns {left-axiom solution, right-axiom solution}.
std::pair<AntipodeConvention, AntipodeConvention> solve_antipode(const UqSu2Rep& rep);

using numerics::SlopeFit;

/// ‖Δ_q(X₊) − Δ₁(X₊)‖ for q = 1 + ε over the given ε, fitted in log-log.
SlopeFit classical_limit_slope(int two_j, const std::vector<double>& epsilons);

}  // namespace symmetria::hopf
