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
#include <vector>

#include "avc/avcode.hpp"
#include "avc/mpoly.hpp"
#include "avc/zbounds.hpp"

namespace avc {

/// N(m, r) = C(m+r, m+1): linear constraints per point for a multiplicity-r
/// zero of Q(X_1..X_m, Z).
long long n_constraints(int m, int r);

/// B(i, E, r): the K in Delta(r, m) with dzero(K * M^i) < n - E for every
/// border monomial M. Ascending lex.
std::vector<Monomial> b_set(int i, long long E, int r, const GridShape& shape,
                            const MonomialFamily& family, BoundMethod method, DTable& dtable);

/// Preparation-step output: coefficient supports for Q_0..Q_t. supports[i] is
/// the support of Q_i; supports[t] is trimmed to the lex-smallest elements so
/// that the total support count is exactly n*N(m,r) + 1 (one more unknown
/// than interpolation constraints).
struct DecoderPlan {
    int r = 0;
    long long E = 0;
    int t = 0;
    BoundMethod method = BoundMethod::RecursiveD;
    GridShape shape;
    std::vector<Monomial> family_monomials;
    std::vector<std::vector<Monomial>> supports;

    long long support_count() const;
};

/// Builds the plan for correcting E errors at multiplicity r: t is the
/// smallest Z-degree >= 1 with sum_{i=0..t} |B(i,E,r)| > n*N(m,r). Throws
/// RadiusInfeasible when the accumulation stalls on an empty B(i), i >= 1.
DecoderPlan plan(int r, long long E, const GridShape& shape, const MonomialFamily& family,
                 BoundMethod method, DTable& dtable);

/// Largest E for which a plan exists (feasibility is monotone in E, so binary
/// search applies); nullopt when even E = 0 admits no plan.
std::optional<long long> max_radius(int r, const GridShape& shape, const MonomialFamily& family,
                                    BoundMethod method, DTable& dtable);

/// Step 1: a nonzero Q with Supp(Q_i) inside the plan supports and every
/// (P_j, r_j) a zero of multiplicity at least r. Solved as a nullspace
/// computation over F_q.
ZPoly interpolate(const DecoderPlan& plan, const PointEnsemble& ensemble,
                  std::span<const int> received);

/// Step 2: all F with Supp(F) inside the family and (Z - F) | Q, found by
/// eliminating variables one at a time: slice Q at enough points of the
/// corresponding S_j, solve the slices recursively, and rebuild the
/// eliminated variable in Newton form, pruning branches whose divided
/// differences leave the family's exponent caps. Results are re-verified with
/// divide_linear_z. Throws ListOverflow if more than `cap` roots (or an
/// excessive search tree) appear.
std::vector<MPoly> z_roots(const ZPoly& q, const MonomialFamily& family,
                           const PointEnsemble& ensemble, long long cap = 4096);

struct DecodeItem {
    MPoly message_poly;
    std::vector<int> codeword;
    long long distance = 0;
};

struct DecodeOutput {
    std::vector<DecodeItem> items;  // sorted by (distance, codeword)
};

/// Algorithm: interpolate, extract Z-roots, evaluate. Output contains every
/// codeword within Hamming distance E of the received word.
DecodeOutput decode(const Code& code, const DecoderPlan& plan, std::span<const int> received,
                    long long cap = 4096);

}  // namespace avc
