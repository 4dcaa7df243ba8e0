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
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "avc/error.hpp"
#include "avc/monomial.hpp"
#include "avc/rational.hpp"

namespace avc {

/// Sizes (s_1, ..., s_m) of the product point set; n = prod s_i.
struct GridShape {
    std::vector<int> sizes;

    GridShape() = default;
    explicit GridShape(std::vector<int> s);
    static GridShape uniform(int m, int q) { return GridShape(std::vector<int>(m, q)); }

    int arity() const { return (int)sizes.size(); }
    long long n() const { return n_; }

    bool operator==(const GridShape& o) const { return sizes == o.sizes; }

   private:
    long long n_ = 1;
};

enum class BoundMethod { RecursiveD, ClosedFormC, SchwartzZippel, Footprint };

const char* bound_method_name(BoundMethod m);

/// True iff sum_j floor(i_j / s_j) < r; outside this set every grid point can
/// be a zero of multiplicity r, so all bounds collapse to n.
bool in_delta(std::span<const int> exps, const GridShape& shape, int r);

/// (i_1 s_2...s_m + ... + s_1...s_{m-1} i_m) / r, exact and uncapped.
Rational sz_mult_bound(const Monomial& i, const GridShape& shape, int r);
long long sz_numerator(std::span<const int> exps, const GridShape& shape);

/// n - (s_1-i_1)...(s_m-i_m), or n when some i_j >= s_j. Plain zeros (r = 1).
long long footprint_bound(const Monomial& i, const GridShape& shape);

/// Closed two-variable upper bounds on D (cases C.1-C.4), dispatched by exact
/// rational region tests, capped at min(SZ, s1*s2). Returns n outside the
/// floor-sum region. Throws NoCaseApplies if no region condition holds (not
/// expected to be reachable; surfaced rather than guessed).
Rational closed_form_c(int i1, int i2, int r, int s1, int s2);

/// Memoized batch evaluator for the recursive D function. A row fixes the
/// exponent prefix and multiplicity and holds D for every value of the next
/// coordinate at once; recursion reuses rows across all multiplicities
/// r' <= r, so one table serves a whole radius search. Lookups are pure;
/// insertion is guarded by a mutex, so concurrent use is safe.
class DTable {
   public:
    explicit DTable(GridShape shape) : shape_(std::move(shape)) {}

    const GridShape& shape() const { return shape_; }

    /// D(i_1..i_m, r, s_1..s_m) exactly as defined; values never exceed n.
    long long value(std::span<const int> exps, int r);

    long long value(const Monomial& m, int r) { return value(std::span<const int>(m.exps), r); }

   private:
    // Row of D over the coordinate at position `level` (0-based), for a fixed
    // prefix i_1..i_level and multiplicity rp. Entry x covers i_{level+1} = x
    // for x in [0, rp * s_{level+1}]; beyond that the row is constant.
    const std::vector<long long>& row(std::span<const int> prefix, int level, int rp);

    GridShape shape_;
    std::mutex mu_;
    std::map<std::tuple<int, std::vector<int>, int>, std::vector<long long>> rows_;
};

/// Unified dispatcher: n off the floor-sum region, otherwise the selected
/// bound capped at n. ClosedFormC requires m = 2 (MethodArityMismatch);
/// Footprint requires r = 1.
Rational dzero(const Monomial& i, int r, const GridShape& shape, BoundMethod method,
               DTable& dtable);

/// Smallest integer tau with dzero < tau, i.e. floor(dzero) + 1, clamped to
/// n + 1. The strict comparison dzero < n - E becomes the integer test
/// threshold <= n - E.
long long dzero_threshold(std::span<const int> exps, int r, const GridShape& shape,
                          BoundMethod method, DTable& dtable);

/// All monomials with i_j < r*s_j and floor-sum < r, in ascending lex order.
std::vector<Monomial> delta_set(int r, const GridShape& shape);

enum class StatKind { Max, Mean };

/// Reference Schwartz-Zippel count used inside the improvement statistics:
/// Scaled is min{floor(sigma q^{m-1} / r), q^m}; Unscaled omits the /r.
/// Scaled reproduces the published grids; Unscaled is kept for comparison.
enum class MeanSzVariant { Scaled, Unscaled };

/// Improvement statistics of the recursive D bound over the multiplicity
/// Schwartz-Zippel count on the uniform grid q^m, taken over the exponents
/// with floor-sum below r:
///  - Max: max of (v - D)/q^m with v the scaled count.
///  - Mean: mean of (v - D)/v over nonzero exponents with v > 0.
/// Exact arithmetic throughout; the result is rendered truncated (not
/// rounded) toward zero at `decimals` places.
std::string improvement_stat(int m, int q, int r, StatKind kind,
                             MeanSzVariant variant = MeanSzVariant::Scaled, int decimals = 3);

/// Exact value of the Max statistic (always has denominator q^m).
Rational improvement_max(int m, int q, int r);

}  // namespace avc
