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
#include <complex>
#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace symmetria::liealg {

using Rational = boost::multiprecision::cpp_rational;

/// Exponent multi-index over N variables.
template <std::size_t N>
using Exponents = std::array<int, N>;

/// Sparse polynomial in N commuting variables with coefficients of type C.
/// Canonical form: no zero coefficient is stored.
template <typename C, std::size_t N>
class Polynomial {
public:
    using Terms = std::map<Exponents<N>, C>;

    Polynomial() = default;

    static Polynomial constant(const C& c) {
        Polynomial p;
        p.add_term(Exponents<N>{}, c);
        return p;
    }

    static Polynomial variable(std::size_t index) {
        Exponents<N> e{};
        e.at(index) = 1;
        Polynomial p;
        p.add_term(e, C(1));
        return p;
    }

    static Polynomial monomial(const Exponents<N>& e, const C& c) {
        Polynomial p;
        p.add_term(e, c);
        return p;
    }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Coefficient of a monomial (zero when absent).
    C coefficient(const Exponents<N>& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? C(0) : it->second;
    }

    void add_term(const Exponents<N>& e, const C& c) {
        if (c == C(0)) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == C(0)) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& other) {
        for (const auto& [e, c] : other.terms_) add_term(e, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& other) {
        for (const auto& [e, c] : other.terms_) add_term(e, -c);
        return *this;
    }

    Polynomial& operator*=(const C& s) {
        if (s == C(0)) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) { return a *= C(-1); }
    friend Polynomial operator*(Polynomial a, const C& s) { return a *= s; }
    friend Polynomial operator*(const C& s, Polynomial a) { return a *= s; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial out;
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponents<N> e{};
                for (std::size_t i = 0; i < N; ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

    Polynomial derivative(std::size_t var) const {
        Polynomial out;
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Exponents<N> d = e;
            d[var] -= 1;
            out.add_term(d, c * C(e[var]));
        }
        return out;
    }

    /// Total degree of the highest term; −1 for the zero polynomial.
    int degree() const {
        int best = -1;
        for (const auto& [e, c] : terms_) {
            int d = 0;
            for (int x : e) d += x;
            best = std::max(best, d);
        }
        return best;
    }

    std::string to_string(const std::array<std::string_view, N>& names) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c << ")";
            for (std::size_t i = 0; i < N; ++i) {
                if (e[i] == 0) continue;
                os << "*" << names[i];
                if (e[i] > 1) os << "^" << e[i];
            }
        }
        return os.str();
    }

private:
    Terms terms_;
};

/// Variables of T*R⁴: positions x⁰..x³ then momenta p₀..p₃.
enum PhaseVar : std::size_t { x0 = 0, x1, x2, x3, p0, p1, p2, p3 };

inline constexpr std::array<std::string_view, 8> phase_var_names = {"x0", "x1", "x2", "x3",
                                                                     "p0", "p1", "p2", "p3"};

using PhasePolynomial = Polynomial<Rational, 8>;

/// Canonical bracket Σ_μ (∂f/∂x^μ ∂g/∂p_μ − ∂f/∂p_μ ∂g/∂x^μ), exact.
PhasePolynomial poisson_bracket(const PhasePolynomial& f, const PhasePolynomial& g);

/// A bivector table Λ[k][l] = {y_k, y_l} of polynomials in N variables,
/// defining {f, g} = Σ_{k,l} Λ[k][l] ∂_k f ∂_l g.
template <typename C, std::size_t N>
struct PoissonBivector {
    std::array<std::array<Polynomial<C, N>, N>, N> table{};

    Polynomial<C, N> bracket(const Polynomial<C, N>& f, const Polynomial<C, N>& g) const {
        std::array<Polynomial<C, N>, N> df;
        std::array<Polynomial<C, N>, N> dg;
        for (std::size_t k = 0; k < N; ++k) {
            df[k] = f.derivative(k);
            dg[k] = g.derivative(k);
        }
        Polynomial<C, N> out;
        for (std::size_t k = 0; k < N; ++k) {
            if (df[k].is_zero()) continue;
            for (std::size_t l = 0; l < N; ++l) {
                if (dg[l].is_zero() || table[k][l].is_zero()) continue;
                out += table[k][l] * df[k] * dg[l];
            }
        }
        return out;
    }

    bool is_antisymmetric() const {
        for (std::size_t k = 0; k < N; ++k)
            for (std::size_t l = 0; l < N; ++l)
                if (!(table[k][l] + table[l][k]).is_zero()) return false;
        return true;
    }

    /// Jacobiator {y_i,{y_j,y_k}} + {y_j,{y_k,y_i}} + {y_k,{y_i,y_j}}.
    Polynomial<C, N> jacobiator(std::size_t i, std::size_t j, std::size_t k) const {
        const auto yi = Polynomial<C, N>::variable(i);
        const auto yj = Polynomial<C, N>::variable(j);
        const auto yk = Polynomial<C, N>::variable(k);
        return bracket(yi, bracket(yj, yk)) + bracket(yj, bracket(yk, yi)) +
               bracket(yk, bracket(yi, yj));
    }
};

}  // namespace symmetria::liealg
