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

#include <optional>
#include <set>
#include <vector>

#include "avc/gf.hpp"
#include "avc/mpoly.hpp"
#include "avc/zbounds.hpp"

namespace avc {

/// The grid S = S_1 x ... x S_m. Points are ordered row-major with the last
/// coordinate varying fastest; this fixes codeword coordinate indexing.
class PointEnsemble {
   public:
    PointEnsemble(Field field, std::vector<std::vector<int>> sets);

    /// S_i = all q field elements, for every coordinate.
    static PointEnsemble full_grid(const Field& field, int m);

    const Field& field() const { return field_; }
    const GridShape& shape() const { return shape_; }
    int arity() const { return shape_.arity(); }
    long long n() const { return shape_.n(); }
    const std::vector<std::vector<int>>& sets() const { return sets_; }

    /// Coordinates of P_v, v in [0, n).
    std::vector<int> point(long long v) const;

   private:
    Field field_;
    std::vector<std::vector<int>> sets_;
    GridShape shape_;
};

/// The monomial set M with its divisibility border and divisor-closure flag.
class MonomialFamily {
   public:
    /// {X^i : sum_j w_j i_j <= u}.
    static MonomialFamily weighted(std::vector<int> weights, int u, const GridShape& shape);
    /// {X^i : sum_j i_j <= u}.
    static MonomialFamily total_degree(int u, const GridShape& shape);
    /// {X^i : i_j < bounds_j}.
    static MonomialFamily box(std::vector<int> bounds, const GridShape& shape);
    static MonomialFamily explicit_list(std::vector<Monomial> monomials, const GridShape& shape);

    int arity() const { return arity_; }
    long long size() const { return (long long)monomials_.size(); }
    const std::vector<Monomial>& monomials() const { return monomials_; }  // ascending lex
    const std::vector<Monomial>& border() const { return border_; }
    bool divisor_closed() const { return divisor_closed_; }

    bool contains(const Monomial& m) const { return lookup_.count(m) > 0; }
    int max_exponent(int var) const;

    /// Family of the prefix exponents {(i_1..i_{m-1}) : some (i_1..i_m) in M}.
    MonomialFamily project_out_last(const GridShape& prefix_shape) const;

    bool operator==(const MonomialFamily& o) const { return monomials_ == o.monomials_; }

   private:
    MonomialFamily(std::vector<Monomial> monos, const GridShape& shape);

    int arity_;
    std::vector<Monomial> monomials_;
    std::set<Monomial> lookup_;
    std::vector<Monomial> border_;
    bool divisor_closed_ = false;
};

/// E(M, S): the span of the evaluations of the family monomials on the grid.
class Code {
   public:
    Code(PointEnsemble ensemble, MonomialFamily family);

    const PointEnsemble& ensemble() const { return ensemble_; }
    const MonomialFamily& family() const { return family_; }
    const Field& field() const { return ensemble_.field(); }
    long long n() const { return ensemble_.n(); }
    long long dim() const { return family_.size(); }

    /// Rows ev_S(M) for M in M, ascending lex; dim x n.
    const std::vector<std::vector<int>>& generator_matrix() const { return gen_; }

    std::vector<int> encode(std::span<const int> message) const;

    /// Evaluation of an arbitrary polynomial on the grid, in point order.
    std::vector<int> evaluate_on_grid(const MPoly& f) const;

    /// min over the family (equivalently its border) of prod_j (s_j - i_j).
    long long dmin_bound() const;

    /// A polynomial supported in M whose codeword weight equals dmin_bound.
    /// Requires a divisor-closed family (NotDivisorClosed otherwise).
    MPoly min_weight_witness() const;

   private:
    PointEnsemble ensemble_;
    MonomialFamily family_;
    std::vector<std::vector<int>> gen_;
};

long long hamming_distance(std::span<const int> a, std::span<const int> b);

}  // namespace avc
