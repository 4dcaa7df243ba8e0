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

#include "avc/mpoly.hpp"

#include <algorithm>

namespace avc {

int binom_mod_p(long long n, long long k, int p) {
    if (k < 0 || k > n) return 0;
    long long result = 1;
    while (n > 0 || k > 0) {
        long long nd = n % p, kd = k % p;
        if (kd > nd) return 0;
        // C(nd, kd) mod p with nd, kd < p: multiplicative formula, division
        // via Fermat inverse.
        long long num = 1, den = 1;
        for (long long i = 0; i < kd; ++i) {
            num = num * ((nd - i) % p) % p;
            den = den * ((i + 1) % p) % p;
        }
        long long deninv = 1, b = den, e = p - 2;
        while (e > 0) {
            if (e & 1) deninv = deninv * b % p;
            b = b * b % p;
            e >>= 1;
        }
        result = result * (num * deninv % p) % p;
        n /= p;
        k /= p;
    }
    return (int)result;
}

MPoly MPoly::constant(const Field& f, int arity, int c) {
    MPoly r(f, arity);
    r.add_term(Monomial(std::vector<int>(arity, 0)), c);
    return r;
}

MPoly MPoly::monomial_term(const Field& f, Monomial m, int c) {
    MPoly r(f, m.arity());
    r.add_term(m, c);
    return r;
}

void MPoly::check_same(const MPoly& o) const {
    if (!field_.compatible(o.field_))
        fail(ErrorCode::MixedFields, "polynomials over different fields");
    if (arity_ != o.arity_)
        fail(ErrorCode::ArityMismatch, "polynomials of different arity");
}

void MPoly::add_term(const Monomial& m, int c) {
    if (c == 0) return;
    if (m.arity() != arity_) fail(ErrorCode::ArityMismatch, "term arity mismatch");
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second = field_.add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

const Monomial& MPoly::leading_monomial() const {
    if (terms_.empty()) fail(ErrorCode::ZeroPolynomial, "leading monomial of 0");
    return terms_.rbegin()->first;
}

int MPoly::max_degree(int var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exps[var]);
    return d;
}

MPoly MPoly::operator+(const MPoly& o) const {
    check_same(o);
    MPoly r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    check_same(o);
    MPoly r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, field_.neg(c));
    return r;
}

MPoly MPoly::operator-() const {
    MPoly r(field_, arity_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, field_.neg(c));
    return r;
}

MPoly MPoly::scale(int c) const {
    MPoly r(field_, arity_);
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, field_.mul(k, c));
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    check_same(o);
    MPoly r(field_, arity_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, field_.mul(ca, cb));
    return r;
}

bool MPoly::operator==(const MPoly& o) const {
    return field_.compatible(o.field_) && arity_ == o.arity_ && terms_ == o.terms_;
}

int MPoly::evaluate(std::span<const int> point) const {
    if ((int)point.size() != arity_) fail(ErrorCode::ArityMismatch, "evaluation point arity");
    int acc = 0;
    for (const auto& [m, c] : terms_) {
        int v = c;
        for (int j = 0; j < arity_ && v != 0; ++j)
            if (m.exps[j] != 0) v = field_.mul(v, field_.pow(point[j], m.exps[j]));
        acc = field_.add(acc, v);
    }
    return acc;
}

FieldElem MPoly::evaluate(const std::vector<FieldElem>& point) const {
    std::vector<int> p;
    p.reserve(point.size());
    for (const auto& e : point) {
        if (!e.field().compatible(field_)) fail(ErrorCode::MixedFields, "evaluation point field");
        p.push_back(e.value());
    }
    return FieldElem(field_, evaluate(p));
}

MPoly MPoly::substitute(int var, int a) const {
    MPoly r(field_, arity_);
    for (const auto& [m, c] : terms_) {
        Monomial m2 = m;
        m2.exps[var] = 0;
        r.add_term(m2, field_.mul(c, field_.pow(a, m.exps[var])));
    }
    return r;
}

MPoly MPoly::drop_var(int var) const {
    MPoly r(field_, arity_ - 1);
    for (const auto& [m, c] : terms_) {
        if (m.exps[var] != 0) fail(ErrorCode::Internal, "drop_var on live variable");
        Monomial m2;
        m2.exps = m.exps;
        m2.exps.erase(m2.exps.begin() + var);
        r.add_term(m2, c);
    }
    return r;
}

MPoly MPoly::insert_var(int var) const {
    MPoly r(field_, arity_ + 1);
    for (const auto& [m, c] : terms_) {
        Monomial m2;
        m2.exps = m.exps;
        m2.exps.insert(m2.exps.begin() + var, 0);
        r.add_term(m2, c);
    }
    return r;
}

MPoly MPoly::hasse_derivative(const Monomial& k) const {
    if (k.arity() != arity_) fail(ErrorCode::ArityMismatch, "hasse order arity");
    MPoly r(field_, arity_);
    int p = field_.p();
    for (const auto& [m, c] : terms_) {
        int coef = c;
        bool alive = true;
        for (int j = 0; j < arity_; ++j) {
            if (k.exps[j] > m.exps[j]) { alive = false; break; }
            coef = field_.mul(coef, binom_mod_p(m.exps[j], k.exps[j], p) % p);
            if (coef == 0) { alive = false; break; }
        }
        if (!alive) continue;
        Monomial m2 = m;
        for (int j = 0; j < arity_; ++j) m2.exps[j] -= k.exps[j];
        r.add_term(m2, coef);
    }
    return r;
}

MPoly MPoly::taylor_shift(std::span<const int> a) const {
    if ((int)a.size() != arity_) fail(ErrorCode::ArityMismatch, "shift point arity");
    MPoly cur(*this);
    for (int var = 0; var < arity_; ++var) {
        if (a[var] == 0) continue;
        // Group terms by exponents outside var; per group, a dense synthetic
        // shift c[k] += a*c[k+1] sweep.
        std::map<Monomial, std::vector<int>> groups;
        for (const auto& [m, c] : cur.terms_) {
            Monomial key = m;
            int d = key.exps[var];
            key.exps[var] = 0;
            auto& vec = groups[key];
            if ((int)vec.size() <= d) vec.resize(d + 1, 0);
            vec[d] = c;
        }
        MPoly next(field_, arity_);
        for (auto& [key, vec] : groups) {
            int deg = (int)vec.size() - 1;
            for (int i = 0; i < deg; ++i)
                for (int k = deg - 1; k >= i; --k)
                    vec[k] = field_.add(vec[k], field_.mul(a[var], vec[k + 1]));
            for (int d = 0; d <= deg; ++d) {
                if (vec[d] == 0) continue;
                Monomial m = key;
                m.exps[var] = d;
                next.add_term(m, vec[d]);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

std::optional<int> MPoly::multiplicity_at(std::span<const int> a) const {
    if (is_zero()) return std::nullopt;
    MPoly shifted = taylor_shift(a);
    int best = -1;
    for (const auto& [m, c] : shifted.terms()) {
        int t = m.total_degree();
        if (best < 0 || t < best) best = t;
    }
    return best;
}

MPoly MPoly::divide_linear_in_var(int var, int a) const {
    // Synthetic division of each var-group by (X_var - a); remainder must vanish.
    std::map<Monomial, std::vector<int>> groups;
    for (const auto& [m, c] : terms_) {
        Monomial key = m;
        int d = key.exps[var];
        key.exps[var] = 0;
        auto& vec = groups[key];
        if ((int)vec.size() <= d) vec.resize(d + 1, 0);
        vec[d] = c;
    }
    MPoly out(field_, arity_);
    for (auto& [key, vec] : groups) {
        int deg = (int)vec.size() - 1;
        std::vector<int> qcoef(std::max(deg, 0), 0);
        int carry = 0;
        for (int d = deg; d >= 1; --d) {
            carry = field_.add(vec[d], field_.mul(a, carry));
            qcoef[d - 1] = carry;
        }
        int rem = field_.add(vec.empty() ? 0 : vec[0], field_.mul(a, carry));
        if (rem != 0) fail(ErrorCode::Internal, "linear factor does not divide");
        for (int d = 0; d < (int)qcoef.size(); ++d) {
            if (qcoef[d] == 0) continue;
            Monomial m = key;
            m.exps[var] = d;
            out.add_term(m, qcoef[d]);
        }
    }
    return out;
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!s.empty()) s += " + ";
        const auto& [m, c] = *it;
        if (m.is_one())
            s += std::to_string(c);
        else if (c == 1)
            s += m.str();
        else
            s += std::to_string(c) + "*" + m.str();
    }
    return s;
}

ZPoly::ZPoly(std::vector<MPoly> coeffs)
    : field_(coeffs.at(0).field()), arity_(coeffs.at(0).arity()), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (c.arity() != arity_ || !c.field().compatible(field_))
            fail(ErrorCode::ArityMismatch, "inconsistent Z-poly coefficients");
    while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool ZPoly::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

MPoly ZPoly::substitute_z(const MPoly& f) const {
    MPoly acc = MPoly::zero(field_, arity_);
    for (int i = deg_z(); i >= 0; --i) acc = acc * f + coeffs_[i];
    return acc;
}

std::pair<bool, ZPoly> ZPoly::divide_linear_z(const MPoly& f) const {
    if (is_zero()) fail(ErrorCode::ZeroPolynomial, "dividing the zero polynomial");
    int t = deg_z();
    if (t == 0) {
        // Constant in Z: divisible only by nothing; remainder is Q_0.
        return {coeffs_[0].is_zero(), ZPoly(field_, arity_)};
    }
    std::vector<MPoly> q(t, MPoly::zero(field_, arity_));
    MPoly carry = coeffs_[t];
    for (int i = t - 1; i >= 0; --i) {
        q[i] = carry;
        carry = coeffs_[i] + carry * f;
    }
    if (!carry.is_zero()) return {false, ZPoly(field_, arity_)};
    return {true, ZPoly(std::move(q))};
}

int ZPoly::evaluate(std::span<const int> point, int z) const {
    int acc = 0;
    const Field& f = field_;
    for (int i = deg_z(); i >= 0; --i) acc = f.add(f.mul(acc, z), coeffs_[i].evaluate(point));
    return acc;
}

ZPoly ZPoly::substitute_var(int var, int a) const {
    std::vector<MPoly> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.substitute(var, a));
    return ZPoly(std::move(out));
}

ZPoly ZPoly::drop_var(int var) const {
    std::vector<MPoly> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.drop_var(var));
    return ZPoly(std::move(out));
}

MPoly ZPoly::as_mpoly() const {
    MPoly out(field_, arity_ + 1);
    for (int i = 0; i <= deg_z(); ++i)
        for (const auto& [m, c] : coeffs_[i].terms()) {
            Monomial m2;
            m2.exps = m.exps;
            m2.exps.push_back(i);
            out.add_term(m2, c);
        }
    return out;
}

std::string ZPoly::str() const {
    std::string s;
    for (int i = 0; i <= deg_z(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + coeffs_[i].str() + ")";
        if (i == 1) s += "*Z";
        if (i > 1) s += "*Z^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

}  // namespace avc
