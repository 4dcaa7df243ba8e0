/*
   Copyright 2026 The avc authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "avc/gf.hpp"
#include "avc/monomial.hpp"

namespace avc {

/// Sparse multivariate polynomial over F_q. Terms map monomials to nonzero
/// encoded coefficients; the map's key order is the lex order with
/// X_m < ... < X_1, so the leading monomial is the last key. Immutable in
/// spirit: all operations return new values.
class MPoly {
   public:
    MPoly(Field f, int arity) : field_(std::move(f)), arity_(arity) {}

    static MPoly zero(const Field& f, int arity) { return MPoly(f, arity); }
    static MPoly constant(const Field& f, int arity, int c);
    static MPoly monomial_term(const Field& f, Monomial m, int c);

    const Field& field() const { return field_; }
    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return (int)terms_.size(); }
    const std::map<Monomial, int>& terms() const { return terms_; }

    int coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? 0 : it->second;
    }

    /// Lex-largest monomial of the support; throws ZeroPolynomial on 0.
    const Monomial& leading_monomial() const;

    int max_degree(int var) const;

    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator-() const;
    MPoly scale(int c) const;
    bool operator==(const MPoly& o) const;
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    int evaluate(std::span<const int> point) const;
    FieldElem evaluate(const std::vector<FieldElem>& point) const;

    /// Substitutes value a for variable var, producing a polynomial of the
    /// same arity with var eliminated from all exponents.
    MPoly substitute(int var, int a) const;

    /// Drops variable var from the exponent vectors; requires degree 0 in var.
    MPoly drop_var(int var) const;

    /// Inserts a new variable (exponent 0 everywhere) at position var.
    MPoly insert_var(int var) const;

    /// Hasse derivative F^(k): coefficient of T^k in F(X+T), computed termwise
    /// via X^e -> prod_j C(e_j, k_j) X^(e-k) with binomials mod p (Lucas).
    MPoly hasse_derivative(const Monomial& k) const;

    /// F(X + a) via per-variable synthetic Taylor shifts.
    MPoly taylor_shift(std::span<const int> a) const;

    /// mult(F, a): min total degree in the support of F(X + a); nullopt is the
    /// infinity sentinel for F = 0.
    std::optional<int> multiplicity_at(std::span<const int> a) const;

    /// Exact division by the univariate monic (X_var - a); requires divisibility.
    MPoly divide_linear_in_var(int var, int a) const;

    void add_term(const Monomial& m, int c);  // builder; merges and strips zeros

    std::string str() const;

   private:
    void check_same(const MPoly& o) const;

    Field field_;
    int arity_;
    std::map<Monomial, int> terms_;
};

/// C(n, k) mod p via Lucas' theorem; p prime.
int binom_mod_p(long long n, long long k, int p);

/// Polynomial in Z with MPoly coefficients: Q = Q_0 + Q_1 Z + ... + Q_t Z^t.
/// Trailing zero coefficients are trimmed (a stored zero Q_t implies t = 0).
class ZPoly {
   public:
    ZPoly(Field f, int arity) : field_(std::move(f)), arity_(arity) {}
    explicit ZPoly(std::vector<MPoly> coeffs);

    const Field& field() const { return field_; }
    int arity() const { return arity_; }
    int deg_z() const { return (int)coeffs_.size() - 1; }
    bool is_zero() const;
    const MPoly& coeff(int i) const { return coeffs_[i]; }
    const std::vector<MPoly>& coeffs() const { return coeffs_; }

    /// Q(X, f(X)) as an MPoly (Horner in Z).
    MPoly substitute_z(const MPoly& f) const;

    /// Synthetic division by (Z - f): returns {divides, quotient}. The
    /// remainder test is exact: divides iff substitute_z(f) == 0. Throws
    /// ZeroPolynomial when called on the zero polynomial.
    std::pair<bool, ZPoly> divide_linear_z(const MPoly& f) const;

    int evaluate(std::span<const int> point, int z) const;

    /// Partial evaluation X_var := a on every coefficient.
    ZPoly substitute_var(int var, int a) const;

    ZPoly drop_var(int var) const;

    /// The (m+1)-variate polynomial with Z as the last variable.
    MPoly as_mpoly() const;

    bool operator==(const ZPoly& o) const { return coeffs_ == o.coeffs_; }

    std::string str() const;

   private:
    Field field_;
    int arity_;
    std::vector<MPoly> coeffs_;
};

}  // namespace avc
