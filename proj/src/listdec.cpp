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

#include "avc/listdec.hpp"

#include <algorithm>
#include <map>

#include "avc/linalg.hpp"

namespace avc {

namespace {

constexpr int kMaxZDegree = 100000;

// Calls fn(exps) for every monomial of Delta(r, m) in ascending lex order.
template <typename Fn>
void for_each_delta(int r, const GridShape& shape, Fn&& fn) {
    const int m = shape.arity();
    std::vector<int> e(m, 0);
    while (true) {
        if (in_delta(e, shape, r)) fn(std::span<const int>(e));
        int j = m - 1;
        while (j >= 0) {
            if (++e[j] < r * shape.sizes[j]) break;
            e[j] = 0;
            --j;
        }
        if (j < 0) break;
    }
}

// Smallest integer tau such that dzero(K * M^i) < tau for every border
// monomial M. A shift outside the Delta box maps to n + 1 and so fails the
// comparison against n - E for every E >= 0.
long long worst_threshold(std::span<const int> k_exps, int i,
                          const std::vector<Monomial>& border, int r, const GridShape& shape,
                          BoundMethod method, DTable& dtable) {
    long long worst = 0;
    std::vector<int> e(k_exps.size());
    for (const auto& mono : border) {
        for (size_t j = 0; j < e.size(); ++j) e[j] = k_exps[j] + i * mono.exps[j];
        worst = std::max(worst, dzero_threshold(e, r, shape, method, dtable));
        if (worst > shape.n()) break;
    }
    return worst;
}

}  // namespace

long long n_constraints(int m, int r) {
    // C(m+r, m+1)
    long long num = 1, den = 1;
    for (int i = 1; i <= m + 1; ++i) {
        num *= r - 1 + i;
        den *= i;
    }
    return num / den;
}

std::vector<Monomial> b_set(int i, long long E, int r, const GridShape& shape,
                            const MonomialFamily& family, BoundMethod method, DTable& dtable) {
    if (E >= shape.n()) throw std::invalid_argument("E must be below the code length");
    std::vector<Monomial> out;
    const long long tau = shape.n() - E;
    for_each_delta(r, shape, [&](std::span<const int> k_exps) {
        if (worst_threshold(k_exps, i, family.border(), r, shape, method, dtable) <= tau)
            out.push_back(Monomial(std::vector<int>(k_exps.begin(), k_exps.end())));
    });
    return out;
}

long long DecoderPlan::support_count() const {
    long long total = 0;
    for (const auto& s : supports) total += (long long)s.size();
    return total;
}

DecoderPlan plan(int r, long long E, const GridShape& shape, const MonomialFamily& family,
                 BoundMethod method, DTable& dtable) {
    const long long need = shape.n() * n_constraints(shape.arity(), r);
    DecoderPlan p;
    p.r = r;
    p.E = E;
    p.method = method;
    p.shape = shape;
    p.family_monomials = family.monomials();

    long long total = 0;
    for (int i = 0;; ++i) {
        if (i > kMaxZDegree) fail(ErrorCode::Internal, "Z-degree runaway in plan search");
        auto b = b_set(i, E, r, shape, family, method, dtable);
        if (i >= 1 && b.empty())
            fail(ErrorCode::RadiusInfeasible,
                 "support accumulation stalls at Z-degree " + std::to_string(i) + " for E = " +
                     std::to_string(E));
        total += (long long)b.size();
        p.supports.push_back(std::move(b));
        if (i >= 1 && total > need) {
            p.t = i;
            long long keep = (long long)p.supports.back().size() - (total - (need + 1));
            if (keep < 1) fail(ErrorCode::Internal, "trimmed top support would be empty");
            p.supports.back().resize((size_t)keep);
            return p;
        }
    }
}

namespace {

// Histogram-backed feasibility search: per Z-degree i, a cumulative count of
// Delta monomials by worst-case threshold, so one sweep serves every E probed
// by the binary search. The tables depend only on (shape, family, r, method).
class RadiusSearcher {
   public:
    RadiusSearcher(int r, const GridShape& shape, const MonomialFamily& family,
                   BoundMethod method, DTable& dtable)
        : r_(r), shape_(shape), family_(family), method_(method), dtable_(dtable) {
        const int m = shape.arity();
        dims_.resize(m);
        long long total = 1;
        for (int j = 0; j < m; ++j) {
            dims_[j] = (long long)r * shape.sizes[j];
            total *= dims_[j];
        }
        thresholds_.assign((size_t)total, shape.n() + 1);
        std::vector<int> e(m, 0);
        for_each_delta(r, shape, [&](std::span<const int> k) {
            thresholds_[(size_t)flat_index(k)] =
                dzero_threshold(k, r, shape_, method_, dtable_);
        });
        need_ = shape.n() * n_constraints(m, r);
    }

    bool feasible(long long E) {
        const long long tau = shape_.n() - E;
        if (tau <= 0) return false;
        long long total = 0;
        for (int i = 0;; ++i) {
            long long c = count(i, tau);
            if (i >= 1 && c == 0) return false;
            total += c;
            if (i >= 1 && total > need_) return true;
            if (i > kMaxZDegree) fail(ErrorCode::Internal, "Z-degree runaway in radius search");
        }
    }

    std::optional<long long> max_radius() {
        if (!feasible(0)) return std::nullopt;
        long long lo = 0, hi = shape_.n() - 1;
        while (lo < hi) {
            long long mid = lo + (hi - lo + 1) / 2;
            if (feasible(mid))
                lo = mid;
            else
                hi = mid - 1;
        }
        return lo;
    }

   private:
    long long flat_index(std::span<const int> exps) const {
        long long idx = 0;
        for (size_t j = 0; j < exps.size(); ++j) idx = idx * dims_[j] + exps[j];
        return idx;
    }

    // Worst threshold over border monomials for K shifted by i*M, or n+1 when
    // any shift leaves the box.
    long long shifted_threshold(std::span<const int> k, int i) const {
        long long worst = 0;
        const int m = shape_.arity();
        for (const auto& mono : family_.border()) {
            long long idx = 0;
            bool inside = true;
            for (int j = 0; j < m; ++j) {
                long long e = k[j] + (long long)i * mono.exps[j];
                if (e >= dims_[j]) { inside = false; break; }
                idx = idx * dims_[j] + e;
            }
            long long t = inside ? thresholds_[(size_t)idx] : shape_.n() + 1;
            worst = std::max(worst, t);
            if (worst > shape_.n()) break;
        }
        return worst;
    }

    long long count(int i, long long tau) {
        while ((int)cums_.size() <= i) {
            int build_i = (int)cums_.size();
            std::vector<long long> hist((size_t)shape_.n() + 2, 0);
            for_each_delta(r_, shape_, [&](std::span<const int> k) {
                ++hist[(size_t)shifted_threshold(k, build_i)];
            });
            for (size_t t = 1; t < hist.size(); ++t) hist[t] += hist[t - 1];
            cums_.push_back(std::move(hist));
        }
        return cums_[i][(size_t)tau];
    }

    int r_;
    GridShape shape_;
    const MonomialFamily& family_;
    BoundMethod method_;
    DTable& dtable_;
    std::vector<long long> dims_;
    std::vector<long long> thresholds_;
    std::vector<std::vector<long long>> cums_;
    long long need_ = 0;
};

}  // namespace

std::optional<long long> max_radius(int r, const GridShape& shape, const MonomialFamily& family,
                                    BoundMethod method, DTable& dtable) {
    RadiusSearcher s(r, shape, family, method, dtable);
    return s.max_radius();
}

ZPoly interpolate(const DecoderPlan& plan, const PointEnsemble& ensemble,
                  std::span<const int> received) {
    if (!(ensemble.shape() == plan.shape))
        fail(ErrorCode::PlanMismatch, "plan was built for a different grid shape");
    if ((long long)received.size() != ensemble.n())
        fail(ErrorCode::PlanMismatch, "received word length differs from the code length");
    const Field& f = ensemble.field();
    const int m = ensemble.arity();
    const int r = plan.r;

    // Column labels (i, K).
    struct Col {
        int zdeg;
        const Monomial* mono;
    };
    std::vector<Col> cols;
    for (int i = 0; i < (int)plan.supports.size(); ++i)
        for (const auto& mono : plan.supports[i]) cols.push_back({i, &mono});

    // Hasse orders (k, k_z) with |k| + k_z < r.
    std::vector<std::vector<int>> orders;
    {
        std::vector<int> k(m + 1, 0);
        while (true) {
            int tot = 0;
            for (int v : k) tot += v;
            if (tot < r) orders.push_back(k);
            int j = m;
            while (j >= 0) {
                if (++k[j] < r) break;
                k[j] = 0;
                --j;
            }
            if (j < 0) break;
        }
    }

    const long long rows = ensemble.n() * n_constraints(m, r);
    if ((long long)orders.size() * ensemble.n() != rows)
        fail(ErrorCode::Internal, "constraint enumeration mismatch");
    GFMatrix mat(f, rows, (long long)cols.size());

    const int p = f.p();
    long long row = 0;
    for (long long v = 0; v < ensemble.n(); ++v) {
        const std::vector<int> pt = ensemble.point(v);
        const int rv = received[(size_t)v];
        for (const auto& ord : orders) {
            const int kz = ord[m];
            for (size_t c = 0; c < cols.size(); ++c) {
                const int i = cols[c].zdeg;
                if (kz > i) continue;
                int coef = binom_mod_p(i, kz, p);
                if (coef == 0) continue;
                coef = f.mul(coef, f.pow(rv, i - kz));
                if (coef == 0) continue;
                // Hasse derivative of X^K evaluated at the point.
                const Monomial& mono = *cols[c].mono;
                int val = coef;
                for (int j = 0; j < m && val != 0; ++j) {
                    if (ord[j] > mono.exps[j]) { val = 0; break; }
                    if (ord[j] != 0) val = f.mul(val, binom_mod_p(mono.exps[j], ord[j], p));
                    if (val != 0 && mono.exps[j] - ord[j] != 0)
                        val = f.mul(val, f.pow(pt[j], mono.exps[j] - ord[j]));
                }
                if (val != 0) mat.at(row, (long long)c) = val;
            }
            ++row;
        }
    }

    std::vector<int> x = mat.nullspace_vector();
    if (x.empty()) fail(ErrorCode::InternalNoKernel, "interpolation system has a trivial kernel");

    std::vector<MPoly> qs((size_t)plan.supports.size(), MPoly::zero(f, m));
    bool nonzero = false;
    for (size_t c = 0; c < cols.size(); ++c) {
        if (x[c] == 0) continue;
        qs[(size_t)cols[c].zdeg].add_term(*cols[c].mono, x[c]);
        nonzero = true;
    }
    if (!nonzero) fail(ErrorCode::InternalNoKernel, "kernel vector is zero");
    return ZPoly(std::move(qs));
}

namespace {

struct RootSearch {
    const PointEnsemble& ensemble;
    long long cap;
    long long nodes = 0;

    void bump() {
        if (++nodes > 1000000)
            fail(ErrorCode::ListOverflow, "root search exceeded its node budget");
    }

    std::vector<MPoly> univariate_roots(const ZPoly& q) {
        bump();
        const Field& f = ensemble.field();
        std::vector<MPoly> out;
        std::vector<int> none;
        for (int z = 0; z < f.q(); ++z)
            if (q.evaluate(none, z) == 0) out.push_back(MPoly::constant(f, 0, z));
        return out;
    }

    // All F with Supp(F) in `fam` (arity j >= 1) and Q(X, F) = 0; Q has arity j.
    std::vector<MPoly> solve(ZPoly q, const MonomialFamily& fam, int j) {
        bump();
        const Field& f = ensemble.field();
        if (q.is_zero()) fail(ErrorCode::Internal, "zero polynomial in root recursion");
        const int var = j - 1;
        const int dj = fam.max_exponent(var);
        const auto& sj = ensemble.sets()[var];

        // Slice at dj+1 points of S_j; a vanishing slice means (X_j - a)
        // divides every coefficient and can be removed without changing the
        // root set.
        std::vector<int> pts;
        std::vector<std::vector<MPoly>> slice_roots;
        std::optional<MonomialFamily> pre_fam;
        if (j >= 2) {
            GridShape pre_shape(std::vector<int>(ensemble.shape().sizes.begin(),
                                                 ensemble.shape().sizes.begin() + var));
            pre_fam = fam.project_out_last(pre_shape);
        }
        for (size_t idx = 0; idx < sj.size() && (int)pts.size() < dj + 1; ++idx) {
            const int a = sj[idx];
            ZPoly sl(f, var);
            while (true) {
                sl = q.substitute_var(var, a).drop_var(var);
                if (!sl.is_zero()) break;
                std::vector<MPoly> reduced;
                for (const auto& qc : q.coeffs())
                    reduced.push_back(qc.is_zero() ? qc : qc.divide_linear_in_var(var, a));
                q = ZPoly(std::move(reduced));
            }
            pts.push_back(a);
            slice_roots.push_back(j >= 2 ? solve(sl, *pre_fam, j - 1)
                                         : univariate_roots(sl));
        }
        if ((int)pts.size() < dj + 1)
            fail(ErrorCode::Internal, "not enough evaluation points for root rebuilding");

        // Per-monomial exponent caps for the Newton pruning.
        std::map<Monomial, int> caps;
        for (const auto& mono : fam.monomials()) {
            Monomial pre;
            pre.exps.assign(mono.exps.begin(), mono.exps.end() - 1);
            auto [it, _] = caps.try_emplace(pre, mono.exps[var]);
            it->second = std::max(it->second, mono.exps[var]);
        }

        std::vector<MPoly> out;
        // DFS over slice-root choices, maintaining the Newton coefficients
        // c_0..c_l of the interpolant through the chosen values.
        std::vector<MPoly> newton;
        dfs(0, pts, slice_roots, caps, newton, fam, j, out);
        // A candidate agrees with roots on the chosen hyperplanes only; keep
        // the actual divisors of this level's polynomial.
        std::vector<MPoly> sound;
        for (auto& cand : out)
            if (q.divide_linear_z(cand).first) sound.push_back(std::move(cand));
        return sound;
    }

    void dfs(int l, const std::vector<int>& pts,
             const std::vector<std::vector<MPoly>>& slice_roots,
             const std::map<Monomial, int>& caps, std::vector<MPoly>& newton,
             const MonomialFamily& fam, int j, std::vector<MPoly>& out) {
        bump();
        const Field& f = ensemble.field();
        const int var = j - 1;
        if (l == (int)pts.size()) {
            // Expand the Newton form and keep it if it stays inside the family.
            MPoly cand = MPoly::zero(f, j);
            MPoly basis = MPoly::constant(f, j, 1);
            for (int i = 0; i < l; ++i) {
                cand = cand + newton[i].insert_var(var) * basis;
                Monomial xj(std::vector<int>(j, 0));
                xj.exps[var] = 1;
                MPoly lin = MPoly::monomial_term(f, xj, 1);
                lin.add_term(Monomial(std::vector<int>(j, 0)), f.neg(pts[i]));
                basis = basis * lin;
            }
            for (const auto& [mono, c] : cand.terms())
                if (!fam.contains(mono)) return;
            out.push_back(std::move(cand));
            if ((long long)out.size() > cap)
                fail(ErrorCode::ListOverflow, "root list exceeded the cap");
            return;
        }
        for (const MPoly& g : slice_roots[l]) {
            // Divided difference of order l at pts[l]:
            //   c_l = (g - sum_{i<l} c_i prod_{u<i}(a_l - a_u)) / prod_{u<l}(a_l - a_u)
            int denom = 1;
            MPoly acc = g;
            int basis_val = 1;
            for (int i = 0; i < l; ++i) {
                acc = acc - newton[i].scale(basis_val);
                basis_val = f.mul(basis_val, f.sub(pts[l], pts[i]));
            }
            denom = basis_val;
            MPoly cl = acc.scale(f.inv(denom));
            // Prune: a divided difference of order l can only touch prefix
            // monomials K with cap(K) >= l.
            bool ok = true;
            for (const auto& [mono, c] : cl.terms()) {
                auto it = caps.find(mono);
                if (it == caps.end() || it->second < l) { ok = false; break; }
            }
            if (!ok) continue;
            newton.push_back(std::move(cl));
            dfs(l + 1, pts, slice_roots, caps, newton, fam, j, out);
            newton.pop_back();
        }
    }
};

}  // namespace

std::vector<MPoly> z_roots(const ZPoly& q, const MonomialFamily& family,
                           const PointEnsemble& ensemble, long long cap) {
    if (q.is_zero()) fail(ErrorCode::ZeroPolynomial, "root extraction from the zero polynomial");
    if (q.arity() != ensemble.arity()) fail(ErrorCode::ArityMismatch, "polynomial/grid arity");
    RootSearch search{ensemble, cap};
    std::vector<MPoly> roots = search.solve(q, family, q.arity());
    // Contract check: every reported root is a true linear factor.
    std::vector<MPoly> verified;
    for (auto& fpoly : roots) {
        auto [divides, quotient] = q.divide_linear_z(fpoly);
        (void)quotient;
        if (divides) verified.push_back(std::move(fpoly));
    }
    std::sort(verified.begin(), verified.end(), [](const MPoly& a, const MPoly& b) {
        auto ta = a.terms().begin(), tb = b.terms().begin();
        for (; ta != a.terms().end() && tb != b.terms().end(); ++ta, ++tb) {
            if (ta->first != tb->first) return ta->first < tb->first;
            if (ta->second != tb->second) return ta->second < tb->second;
        }
        return a.term_count() < b.term_count();
    });
    return verified;
}

DecodeOutput decode(const Code& code, const DecoderPlan& plan, std::span<const int> received,
                    long long cap) {
    if (!(code.family().monomials() == plan.family_monomials))
        fail(ErrorCode::PlanMismatch, "plan was built for a different monomial family");
    ZPoly q = interpolate(plan, code.ensemble(), received);
    std::vector<MPoly> roots = z_roots(q, code.family(), code.ensemble(), cap);
    DecodeOutput out;
    for (auto& fpoly : roots) {
        DecodeItem item{fpoly, code.evaluate_on_grid(fpoly), 0};
        item.distance = hamming_distance(item.codeword, received);
        out.items.push_back(std::move(item));
    }
    std::sort(out.items.begin(), out.items.end(), [](const DecodeItem& a, const DecodeItem& b) {
        if (a.distance != b.distance) return a.distance < b.distance;
        return a.codeword < b.codeword;
    });
    return out;
}

}  // namespace avc
