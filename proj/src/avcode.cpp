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

#include "avc/avcode.hpp"

#include <algorithm>
#include <set>

#include "avc/linalg.hpp"

namespace avc {

PointEnsemble::PointEnsemble(Field field, std::vector<std::vector<int>> sets)
    : field_(std::move(field)), sets_(std::move(sets)) {
    std::vector<int> sizes;
    for (const auto& s : sets_) {
        if (s.empty()) throw std::invalid_argument("empty evaluation set");
        std::set<int> seen;
        for (int v : s) {
            if (v < 0 || v >= field_.q())
                throw std::invalid_argument("set element outside the field");
            if (!seen.insert(v).second)
                fail(ErrorCode::DuplicatePoint, "repeated element in an evaluation set");
        }
        sizes.push_back((int)s.size());
    }
    shape_ = GridShape(std::move(sizes));
}

PointEnsemble PointEnsemble::full_grid(const Field& field, int m) {
    std::vector<int> full(field.q());
    for (int v = 0; v < field.q(); ++v) full[v] = v;
    return PointEnsemble(field, std::vector<std::vector<int>>(m, full));
}

std::vector<int> PointEnsemble::point(long long v) const {
    const int m = arity();
    std::vector<int> out(m);
    for (int j = m - 1; j >= 0; --j) {
        long long s = shape_.sizes[j];
        out[j] = sets_[j][v % s];
        v /= s;
    }
    return out;
}

MonomialFamily::MonomialFamily(std::vector<Monomial> monos, const GridShape& shape)
    : arity_(shape.arity()) {
    if (monos.empty()) throw std::invalid_argument("empty monomial family");
    for (const auto& m : monos) {
        if (m.arity() != arity_) fail(ErrorCode::ArityMismatch, "family monomial arity");
        for (int j = 0; j < arity_; ++j)
            if (m.exps[j] < 0 || m.exps[j] >= shape.sizes[j])
                fail(ErrorCode::ExponentOutOfBox,
                     "monomial " + m.str() + " outside the reduced-exponent box");
    }
    std::sort(monos.begin(), monos.end());
    monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
    monomials_ = std::move(monos);
    lookup_.insert(monomials_.begin(), monomials_.end());

    for (const auto& m : monomials_) {
        bool maximal = true;
        for (const auto& o : monomials_)
            if (o != m && m.divides(o)) { maximal = false; break; }
        if (maximal) border_.push_back(m);
    }

    divisor_closed_ = true;
    for (const auto& m : monomials_) {
        // Enough to check one-step-down neighbours.
        for (int j = 0; j < arity_ && divisor_closed_; ++j) {
            if (m.exps[j] == 0) continue;
            Monomial d = m;
            d.exps[j] -= 1;
            if (!lookup_.count(d)) divisor_closed_ = false;
        }
        if (!divisor_closed_) break;
    }
}

MonomialFamily MonomialFamily::weighted(std::vector<int> weights, int u, const GridShape& shape) {
    if ((int)weights.size() != shape.arity())
        fail(ErrorCode::ArityMismatch, "weight vector arity");
    std::vector<Monomial> monos;
    std::vector<int> e(shape.arity(), 0);
    while (true) {
        long long w = 0;
        for (int j = 0; j < shape.arity(); ++j) w += (long long)weights[j] * e[j];
        if (w <= u) monos.push_back(Monomial(e));
        int j = shape.arity() - 1;
        while (j >= 0) {
            if (++e[j] < shape.sizes[j]) break;
            e[j] = 0;
            --j;
        }
        if (j < 0) break;
    }
    return MonomialFamily(std::move(monos), shape);
}

MonomialFamily MonomialFamily::total_degree(int u, const GridShape& shape) {
    return weighted(std::vector<int>(shape.arity(), 1), u, shape);
}

MonomialFamily MonomialFamily::box(std::vector<int> bounds, const GridShape& shape) {
    if ((int)bounds.size() != shape.arity()) fail(ErrorCode::ArityMismatch, "box bounds arity");
    std::vector<Monomial> monos;
    std::vector<int> e(shape.arity(), 0);
    for (int b : bounds)
        if (b < 1) throw std::invalid_argument("box bounds must be positive");
    while (true) {
        monos.push_back(Monomial(e));
        int j = shape.arity() - 1;
        while (j >= 0) {
            if (++e[j] < bounds[j]) break;
            e[j] = 0;
            --j;
        }
        if (j < 0) break;
    }
    return MonomialFamily(std::move(monos), shape);
}

MonomialFamily MonomialFamily::explicit_list(std::vector<Monomial> monomials,
                                             const GridShape& shape) {
    return MonomialFamily(std::move(monomials), shape);
}

int MonomialFamily::max_exponent(int var) const {
    int d = 0;
    for (const auto& m : monomials_) d = std::max(d, m.exps[var]);
    return d;
}

MonomialFamily MonomialFamily::project_out_last(const GridShape& prefix_shape) const {
    std::vector<Monomial> monos;
    for (const auto& m : monomials_) {
        Monomial p;
        p.exps.assign(m.exps.begin(), m.exps.end() - 1);
        monos.push_back(std::move(p));
    }
    return MonomialFamily(std::move(monos), prefix_shape);
}

Code::Code(PointEnsemble ensemble, MonomialFamily family)
    : ensemble_(std::move(ensemble)), family_(std::move(family)) {
    if (family_.arity() != ensemble_.arity())
        fail(ErrorCode::ArityMismatch, "family/ensemble arity");
    for (int j = 0; j < family_.arity(); ++j)
        if (family_.max_exponent(j) >= ensemble_.shape().sizes[j])
            fail(ErrorCode::ExponentOutOfBox, "family exceeds the ensemble box");

    const Field& f = ensemble_.field();
    const long long n = ensemble_.n();
    const int m = ensemble_.arity();

    // Power tables per coordinate: pow_[j][idx][e] = (S_j[idx])^e.
    std::vector<std::vector<std::vector<int>>> powtab(m);
    for (int j = 0; j < m; ++j) {
        int dmax = family_.max_exponent(j);
        powtab[j].resize(ensemble_.sets()[j].size());
        for (size_t idx = 0; idx < powtab[j].size(); ++idx) {
            auto& vec = powtab[j][idx];
            vec.resize(dmax + 1);
            vec[0] = 1;
            for (int e = 1; e <= dmax; ++e) vec[e] = f.mul(vec[e - 1], ensemble_.sets()[j][idx]);
        }
    }

    gen_.reserve(family_.size());
    for (const auto& mono : family_.monomials()) {
        std::vector<int> rowv((size_t)n);
        std::vector<int> idx(m, 0);
        for (long long v = 0; v < n; ++v) {
            int val = 1;
            for (int j = 0; j < m; ++j) {
                int e = mono.exps[j];
                if (e != 0) val = f.mul(val, powtab[j][idx[j]][e]);
            }
            rowv[(size_t)v] = val;
            int j = m - 1;
            while (j >= 0) {
                if (++idx[j] < (int)ensemble_.sets()[j].size()) break;
                idx[j] = 0;
                --j;
            }
        }
        gen_.push_back(std::move(rowv));
    }

    GFMatrix g(f, (long long)gen_.size(), n);
    for (long long r = 0; r < (long long)gen_.size(); ++r)
        for (long long c = 0; c < n; ++c) g.at(r, c) = gen_[r][c];
    if (g.rank() != (long long)gen_.size())
        fail(ErrorCode::RankDeficient, "generator matrix rank below family size");
}

std::vector<int> Code::encode(std::span<const int> message) const {
    if ((long long)message.size() != dim())
        fail(ErrorCode::LengthMismatch, "message length must equal the dimension");
    const Field& f = field();
    std::vector<int> out((size_t)n(), 0);
    for (size_t k = 0; k < message.size(); ++k) {
        int c = message[k];
        if (c == 0) continue;
        const auto& row = gen_[k];
        for (size_t v = 0; v < out.size(); ++v)
            out[v] = f.add(out[v], f.mul(c, row[v]));
    }
    return out;
}

std::vector<int> Code::evaluate_on_grid(const MPoly& poly) const {
    const long long n = ensemble_.n();
    std::vector<int> out((size_t)n);
    for (long long v = 0; v < n; ++v) out[(size_t)v] = poly.evaluate(ensemble_.point(v));
    return out;
}

long long Code::dmin_bound() const {
    long long best = -1;
    for (const auto& m : family_.border()) {
        long long prod = 1;
        for (int j = 0; j < family_.arity(); ++j)
            prod *= ensemble_.shape().sizes[j] - m.exps[j];
        if (best < 0 || prod < best) best = prod;
    }
    return best;
}

MPoly Code::min_weight_witness() const {
    if (!family_.divisor_closed())
        fail(ErrorCode::NotDivisorClosed, "witness construction needs a divisor-closed family");
    // Border monomial attaining the bound; ties resolved to the lex-smallest.
    const Monomial* bestm = nullptr;
    long long best = -1;
    for (const auto& m : family_.border()) {
        long long prod = 1;
        for (int j = 0; j < family_.arity(); ++j)
            prod *= ensemble_.shape().sizes[j] - m.exps[j];
        if (best < 0 || prod < best || (prod == best && m < *bestm)) {
            best = prod;
            bestm = &m;
        }
    }
    const Field& f = field();
    MPoly witness = MPoly::constant(f, family_.arity(), 1);
    for (int j = 0; j < family_.arity(); ++j) {
        std::vector<int> roots(ensemble_.sets()[j]);
        std::sort(roots.begin(), roots.end());
        for (int t = 0; t < bestm->exps[j]; ++t) {
            Monomial xj(std::vector<int>(family_.arity(), 0));
            xj.exps[j] = 1;
            MPoly lin = MPoly::monomial_term(f, xj, 1);
            lin.add_term(Monomial(std::vector<int>(family_.arity(), 0)), f.neg(roots[t]));
            witness = witness * lin;
        }
    }
    return witness;
}

long long hamming_distance(std::span<const int> a, std::span<const int> b) {
    if (a.size() != b.size()) fail(ErrorCode::LengthMismatch, "distance of unequal words");
    long long d = 0;
    for (size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

}  // namespace avc
