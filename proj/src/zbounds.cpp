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

#include "avc/zbounds.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cassert>

namespace avc {

GridShape::GridShape(std::vector<int> s) : sizes(std::move(s)) {
    if (sizes.empty()) throw std::invalid_argument("empty grid shape");
    n_ = 1;
    for (int v : sizes) {
        if (v < 1) throw std::invalid_argument("grid sizes must be positive");
        if (n_ > (long long)1 << 56) throw std::overflow_error("grid too large");
        n_ *= v;
    }
}

const char* bound_method_name(BoundMethod m) {
    switch (m) {
        case BoundMethod::RecursiveD: return "recursive";
        case BoundMethod::ClosedFormC: return "closed";
        case BoundMethod::SchwartzZippel: return "sz";
        case BoundMethod::Footprint: return "footprint";
    }
    return "?";
}

bool in_delta(std::span<const int> exps, const GridShape& shape, int r) {
    long long fs = 0;
    for (size_t j = 0; j < exps.size(); ++j) fs += exps[j] / shape.sizes[j];
    return fs < r;
}

long long sz_numerator(std::span<const int> exps, const GridShape& shape) {
    long long total = 0;
    for (size_t j = 0; j < exps.size(); ++j) total += exps[j] * (shape.n() / shape.sizes[j]);
    return total;
}

Rational sz_mult_bound(const Monomial& i, const GridShape& shape, int r) {
    if (i.arity() != shape.arity()) fail(ErrorCode::ArityMismatch, "monomial/shape arity");
    return Rational(sz_numerator(i.exps, shape), r);
}

long long footprint_bound(const Monomial& i, const GridShape& shape) {
    if (i.arity() != shape.arity()) fail(ErrorCode::ArityMismatch, "monomial/shape arity");
    long long prod = 1;
    for (int j = 0; j < shape.arity(); ++j) {
        if (i.exps[j] >= shape.sizes[j]) return shape.n();
        prod *= shape.sizes[j] - i.exps[j];
    }
    return shape.n() - prod;
}

Rational closed_form_c(int i1, int i2, int r, int s1, int s2) {
    long long n = (long long)s1 * s2;
    if (i1 / s1 + i2 / s2 >= r) return Rational(n);
    Rational result(-1);
    if ((long long)s1 * (r - 1) <= i1 && i1 < (long long)s1 * r && i2 < s2) {
        // C.4, an exact value of D on its region.
        long long fl = i1 / r;
        result = Rational(s2 * fl + (long long)i2 * (s1 - fl));
    } else {
        for (int k = 1; k < r; ++k) {
            Rational lo((long long)(r - k) * r * s1, r + 1);
            Rational x1(i1);
            if (lo <= x1 && i1 < (long long)(r - k) * s1) {
                if (i2 < (long long)k * s2) {
                    result = Rational(s2) * Rational(i1, r) + Rational(i2, r) * Rational(i1, r - k);
                    break;
                }
                if (i2 < (long long)(k + 1) * s2) {
                    result = Rational(s2) * Rational(i1, r) +
                             Rational((long long)(k + 1) * s2 - i2) *
                                 (Rational(i1, r - k) - Rational(i1, r)) +
                             Rational(i2 - (long long)k * s2) * (Rational(s1) - Rational(i1, r));
                    break;
                }
            }
            if ((long long)(r - k - 1) * s1 <= i1 && x1 < lo && i2 < (long long)(k + 1) * s2) {
                result = Rational(s2) * Rational(i1, r) +
                         Rational(i2, k + 1) * (Rational(s1) - Rational(i1, r));
                break;
            }
        }
    }
    if (result < Rational(0))
        fail(ErrorCode::NoCaseApplies,
             "no closed-form region covers i=(" + std::to_string(i1) + "," + std::to_string(i2) +
                 "), r=" + std::to_string(r));
    Rational cap = Rational::min(Rational(sz_numerator(std::vector<int>{i1, i2},
                                                       GridShape({s1, s2})), r),
                                 Rational(n));
    return Rational::min(result, cap);
}

namespace {

long long d_base(long long i1, int r, int s1) { return std::min(i1 / r, (long long)s1); }

}  // namespace

const std::vector<long long>& DTable::row(std::span<const int> prefix, int level, int rp) {
    std::vector<int> key(prefix.begin(), prefix.end());
    auto map_key = std::make_tuple(level, key, rp);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = rows_.find(map_key);
        if (it != rows_.end()) return it->second;
    }

    const int s = shape_.sizes[level];
    const long long wcap = (long long)rp * s;
    std::vector<long long> out(wcap + 1, 0);

    if (level == 0) {
        for (long long x = 0; x <= wcap; ++x) out[x] = d_base(x, rp, s);
    } else {
        // Scalar D of the prefix at each multiplicity 1..rp, plus the prefix
        // grid size for the u_r term.
        long long npre = 1;
        for (int j = 0; j < level; ++j) npre *= shape_.sizes[j];
        std::vector<long long> dpre(rp + 1, 0);
        for (int rr = 1; rr <= rp; ++rr) {
            if (level == 1) {
                dpre[rr] = d_base(prefix[0], rr, shape_.sizes[0]);
            } else {
                const auto& prow = row(prefix.subspan(0, level - 1), level - 1, rr);
                long long idx = std::min<long long>(prefix[level - 1], (long long)rr *
                                                    shape_.sizes[level - 1]);
                dpre[rr] = prow[idx];
            }
        }
        // Two-constraint knapsack: items k = 1..rp with unit count, weight k
        // and gain dpre[rp-k] - dpre[rp] (grid size for k = rp); dp[c][w] is
        // the best gain with at most c items of total weight at most w.
        std::vector<long long> gains(rp + 1, 0);
        for (int k = 1; k < rp; ++k) gains[k] = dpre[rp - k] - dpre[rp];
        gains[rp] = npre - dpre[rp];
        std::vector<std::vector<long long>> dp(s + 1, std::vector<long long>(wcap + 1, 0));
        for (int k = 1; k <= rp; ++k) {
            long long g = gains[k];
            for (int c = 1; c <= s; ++c) {
                auto& cur = dp[c];
                auto& below = dp[c - 1];
                for (long long w = k; w <= wcap; ++w)
                    cur[w] = std::max(cur[w], below[w - k] + g);
            }
        }
        for (long long x = 0; x <= wcap; ++x) out[x] = s * dpre[rp] + dp[s][x];
    }

    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = rows_.try_emplace(std::move(map_key), std::move(out));
    return it->second;
}

long long DTable::value(std::span<const int> exps, int r) {
    const int m = shape_.arity();
    if ((int)exps.size() != m) fail(ErrorCode::ArityMismatch, "exponents/shape arity");
    if (r < 1) throw std::invalid_argument("multiplicity must be positive");
    if (!in_delta(exps, shape_, r)) return shape_.n();
    if (m == 1) return d_base(exps[0], r, shape_.sizes[0]);
    const auto& rw = row(exps.subspan(0, m - 1), m - 1, r);
    long long idx = std::min<long long>(exps[m - 1], (long long)r * shape_.sizes[m - 1]);
    return rw[idx];
}

Rational dzero(const Monomial& i, int r, const GridShape& shape, BoundMethod method,
               DTable& dtable) {
    if (i.arity() != shape.arity()) fail(ErrorCode::ArityMismatch, "monomial/shape arity");
    const long long n = shape.n();
    if (!in_delta(i.exps, shape, r)) return Rational(n);
    switch (method) {
        case BoundMethod::RecursiveD:
            return Rational(dtable.value(i.exps, r));
        case BoundMethod::SchwartzZippel:
            return Rational::min(sz_mult_bound(i, shape, r), Rational(n));
        case BoundMethod::ClosedFormC:
            if (shape.arity() != 2)
                fail(ErrorCode::MethodArityMismatch, "closed-form bound is two-variable only");
            return closed_form_c(i.exps[0], i.exps[1], r, shape.sizes[0], shape.sizes[1]);
        case BoundMethod::Footprint:
            if (r != 1)
                fail(ErrorCode::MethodArityMismatch, "footprint bound applies at r = 1 only");
            return Rational(footprint_bound(i, shape));
    }
    fail(ErrorCode::Internal, "unknown bound method");
}

long long dzero_threshold(std::span<const int> exps, int r, const GridShape& shape,
                          BoundMethod method, DTable& dtable) {
    const long long n = shape.n();
    if (!in_delta(exps, shape, r)) return n + 1;
    switch (method) {
        case BoundMethod::RecursiveD:
            return dtable.value(exps, r) + 1;
        case BoundMethod::SchwartzZippel:
            return std::min(sz_numerator(exps, shape) / r, n) + 1;
        case BoundMethod::ClosedFormC: {
            if (shape.arity() != 2)
                fail(ErrorCode::MethodArityMismatch, "closed-form bound is two-variable only");
            Rational c = closed_form_c(exps[0], exps[1], r, shape.sizes[0], shape.sizes[1]);
            return c.floor() + 1;
        }
        case BoundMethod::Footprint:
            if (r != 1)
                fail(ErrorCode::MethodArityMismatch, "footprint bound applies at r = 1 only");
            return footprint_bound(Monomial(std::vector<int>(exps.begin(), exps.end())), shape) + 1;
    }
    fail(ErrorCode::Internal, "unknown bound method");
}

std::vector<Monomial> delta_set(int r, const GridShape& shape) {
    std::vector<Monomial> out;
    const int m = shape.arity();
    std::vector<int> e(m, 0);
    // Odometer with the last coordinate fastest yields ascending lex order.
    while (true) {
        if (in_delta(e, shape, r)) out.push_back(Monomial(e));
        int j = m - 1;
        while (j >= 0) {
            if (++e[j] < r * shape.sizes[j]) break;
            e[j] = 0;
            --j;
        }
        if (j < 0) break;
    }
    return out;
}

std::string improvement_stat(int m, int q, int r, StatKind kind, MeanSzVariant variant,
                             int decimals) {
    if (m < 1 || q < 2 || r < 1) throw std::invalid_argument("bad statistic parameters");
    GridShape shape = GridShape::uniform(m, q);
    DTable dtable(shape);
    long long qm = shape.n();
    long long qm1 = qm / q;

    // Group tuples by the reference count v; the heavy loop is integer-only
    // and the exact rational tail runs over at most m*r*q distinct v values.
    std::vector<long long> count_v(qm + 1, 0), sum_d_v(qm + 1, 0);
    long long max_diff = 0;

    const bool scaled = kind == StatKind::Max || variant == MeanSzVariant::Scaled;
    std::vector<int> e(m, 0);
    while (true) {
        if (in_delta(e, shape, r)) {
            long long sigma = 0;
            for (int x : e) sigma += x;
            long long d = dtable.value(e, r);
            long long v = std::min(scaled ? sigma * qm1 / r : sigma * qm1, qm);
            if (kind == StatKind::Max) {
                max_diff = std::max(max_diff, v - d);
            } else if (sigma > 0 && v > 0) {
                count_v[v] += 1;
                sum_d_v[v] += d;
            }
        }
        int j = m - 1;
        while (j >= 0) {
            if (++e[j] < r * q) break;
            e[j] = 0;
            --j;
        }
        if (j < 0) break;
    }

    if (kind == StatKind::Max) return Rational(max_diff, qm).truncated(decimals);

    mpq_class total = 0;
    long long tuples = 0;
    for (long long v = 1; v <= qm; ++v) {
        if (count_v[v] == 0) continue;
        tuples += count_v[v];
        mpq_class term((long)(count_v[v] * v - sum_d_v[v]), (long)v);
        term.canonicalize();
        total += term;
    }
    if (tuples == 0) return Rational(0).truncated(decimals);
    total /= mpq_class((long)tuples);
    mpz_class scale = 1;
    for (int i = 0; i < decimals; ++i) scale *= 10;
    mpz_class shifted = mpz_class(total.get_num() * scale) / total.get_den();
    mpz_class whole = shifted / scale;
    mpz_class frac = shifted % scale;
    std::string f = frac.get_str();
    f.insert(0, decimals - f.size(), '0');
    return whole.get_str() + "." + f;
}

Rational improvement_max(int m, int q, int r) {
    GridShape shape = GridShape::uniform(m, q);
    DTable dtable(shape);
    long long qm = shape.n(), qm1 = qm / q;
    long long max_diff = 0;
    std::vector<int> e(m, 0);
    while (true) {
        if (in_delta(e, shape, r)) {
            long long sigma = 0;
            for (int x : e) sigma += x;
            long long v = std::min(sigma * qm1 / r, qm);
            max_diff = std::max(max_diff, v - dtable.value(e, r));
        }
        int j = m - 1;
        while (j >= 0) {
            if (++e[j] < r * q) break;
            e[j] = 0;
            --j;
        }
        if (j < 0) break;
    }
    return Rational(max_diff, qm);
}

}  // namespace avc
