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

#include "avc/gf.hpp"

#include <algorithm>
#include <charconv>

namespace avc {
namespace {

constexpr long long kMaxOrder = 1 << 16;

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Dense F_p[X] helpers on coefficient vectors, low degree first, no trailing
// zeros (except the zero polynomial, which is the empty vector).

using Poly = std::vector<int>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (int)((c[i + j] + (long long)a[i] * b[j]) % p);
    trim(c);
    return c;
}

// Remainder of a modulo monic b.
Poly poly_mod(Poly a, const Poly& b, int p) {
    trim(a);
    while (a.size() >= b.size()) {
        int lead = a.back();
        size_t shift = a.size() - b.size();
        if (lead != 0)
            for (size_t i = 0; i < b.size(); ++i)
                a[shift + i] = (int)(((long long)a[shift + i] - (long long)lead * b[i]) % p + p) % p;
        a.pop_back();
        trim(a);
    }
    return a;
}

// Decodes an integer in [0, p^deg) into a coefficient vector of length deg.
Poly decode(long long code, int deg, int p) {
    Poly c(deg);
    for (int i = 0; i < deg; ++i) { c[i] = (int)(code % p); code /= p; }
    return c;
}

bool divides(const Poly& d, const Poly& a, int p) { return poly_mod(a, d, p).empty(); }

// Monic irreducible of degree e over F_p whose coefficient vector has the
// smallest base-p encoding. Trial division by all monic factors of degree
// <= e/2 is exact and cheap at q <= 2^16.
Poly canonical_modulus(int p, int e) {
    long long pe = 1;
    for (int i = 0; i < e; ++i) pe *= p;
    for (long long code = 0; code < pe; ++code) {
        Poly f = decode(code, e, p);
        f.resize(e + 1, 0);
        f[e] = 1;
        if (f[0] == 0) continue;  // divisible by X
        bool irred = true;
        for (int d = 1; irred && 2 * d <= e; ++d) {
            long long pd = 1;
            for (int i = 0; i < d; ++i) pd *= p;
            for (long long dc = 0; dc < pd; ++dc) {
                Poly g = decode(dc, d, p);
                g.resize(d + 1, 0);
                g[d] = 1;
                if (divides(g, f, p)) { irred = false; break; }
            }
        }
        if (irred) return f;
    }
    fail(ErrorCode::Internal, "no irreducible polynomial found");
}

std::vector<long long> prime_factors(long long n) {
    std::vector<long long> out;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

struct Field::Impl {
    int p = 0;
    int e = 0;
    int q = 0;
    std::vector<int> modulus;       // length e+1, monic
    std::vector<int> exp_table;     // exp_table[i] = g^i for i in [0, q-1)
    std::vector<int> log_table;     // log_table[v] for v in [1, q)

    long long encode(const Poly& c) const {
        long long v = 0;
        for (size_t i = c.size(); i-- > 0;) v = v * p + c[i];
        return v;
    }

    Poly decode_elem(int v) const {
        Poly c(e);
        long long x = v;
        for (int i = 0; i < e; ++i) { c[i] = (int)(x % p); x /= p; }
        trim(c);
        return c;
    }

    int poly_mul_elems(int a, int b) const {
        Poly r = poly_mod(poly_mul(decode_elem(a), decode_elem(b), p), modulus, p);
        return (int)encode(r);
    }

    int poly_pow_elem(int a, long long k) const {
        int result = 1, base = a;
        while (k > 0) {
            if (k & 1) result = poly_mul_elems(result, base);
            base = poly_mul_elems(base, base);
            k >>= 1;
        }
        return result;
    }

    void build_tables() {
        // Generator: smallest encoded element whose order is q-1, tested via
        // the prime factorization of q-1.
        auto factors = prime_factors(q - 1);
        int g = 0;
        for (int cand = 2; cand < q; ++cand) {
            bool ok = true;
            for (long long f : factors)
                if (poly_pow_elem(cand, (q - 1) / f) == 1) { ok = false; break; }
            if (ok) { g = cand; break; }
        }
        if (g == 0 && q == 2) g = 1;
        if (g == 0) fail(ErrorCode::Internal, "no generator found");
        exp_table.resize(q - 1);
        log_table.assign(q, 0);
        int cur = 1;
        for (int i = 0; i < q - 1; ++i) {
            exp_table[i] = cur;
            log_table[cur] = i;
            cur = poly_mul_elems(cur, g);
        }
        if (cur != 1) fail(ErrorCode::Internal, "generator order mismatch");
    }
};

Field Field::make(long long p, int e) {
    if (!is_prime(p)) fail(ErrorCode::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
    if (e < 1) fail(ErrorCode::FieldTooLarge, "extension degree must be positive");
    long long q = 1;
    for (int i = 0; i < e; ++i) {
        q *= p;
        if (q > kMaxOrder) fail(ErrorCode::FieldTooLarge, "field order exceeds 2^16");
    }
    auto impl = std::make_shared<Impl>();
    impl->p = (int)p;
    impl->e = e;
    impl->q = (int)q;
    impl->modulus = e == 1 ? Poly{0, 1} : canonical_modulus((int)p, e);
    impl->build_tables();
    return Field(std::move(impl));
}

Field Field::parse(std::string_view spec) {
    size_t comma = spec.find(',');
    if (comma == std::string_view::npos)
        throw std::invalid_argument("field spec must be \"p,e\"");
    long long p = 0;
    int e = 0;
    auto r1 = std::from_chars(spec.data(), spec.data() + comma, p);
    auto r2 = std::from_chars(spec.data() + comma + 1, spec.data() + spec.size(), e);
    if (r1.ec != std::errc{} || r2.ec != std::errc{} ||
        r2.ptr != spec.data() + spec.size())
        throw std::invalid_argument("field spec must be \"p,e\"");
    return make(p, e);
}

int Field::p() const { return impl_->p; }
int Field::e() const { return impl_->e; }
int Field::q() const { return impl_->q; }
std::string Field::spec() const { return std::to_string(p()) + "," + std::to_string(e()); }
const std::vector<int>& Field::modulus() const { return impl_->modulus; }

int Field::add(int a, int b) const {
    const Impl& f = *impl_;
    if (f.e == 1) return (int)(((long long)a + b) % f.p);
    if (f.p == 2) return a ^ b;
    int out = 0, mul = 1;
    for (int i = 0; i < f.e; ++i) {
        out += mul * ((a % f.p + b % f.p) % f.p);
        a /= f.p;
        b /= f.p;
        mul *= f.p;
    }
    return out;
}

int Field::neg(int a) const {
    const Impl& f = *impl_;
    if (f.e == 1) return a == 0 ? 0 : f.p - a;
    if (f.p == 2) return a;
    int out = 0, mul = 1;
    for (int i = 0; i < f.e; ++i) {
        int d = a % f.p;
        out += mul * (d == 0 ? 0 : f.p - d);
        a /= f.p;
        mul *= f.p;
    }
    return out;
}

int Field::sub(int a, int b) const { return add(a, neg(b)); }

int Field::mul(int a, int b) const {
    const Impl& f = *impl_;
    if (a == 0 || b == 0) return 0;
    if (f.e == 1) return (int)((long long)a * b % f.p);
    int l = f.log_table[a] + f.log_table[b];
    if (l >= f.q - 1) l -= f.q - 1;
    return f.exp_table[l];
}

int Field::inv(int a) const {
    const Impl& f = *impl_;
    if (a == 0) fail(ErrorCode::DivisionByZero, "inverse of zero");
    if (a == 1) return 1;
    return f.exp_table[(f.q - 1) - f.log_table[a]];
}

int Field::div(int a, int b) const {
    if (b == 0) fail(ErrorCode::DivisionByZero, "division by zero");
    if (a == 0) return 0;
    return mul(a, inv(b));
}

int Field::pow(int a, long long k) const {
    const Impl& f = *impl_;
    if (k == 0) return 1;
    if (a == 0) return 0;
    long long l = f.log_table[a] % (f.q - 1) * (k % (f.q - 1)) % (f.q - 1);
    return f.exp_table[l];
}

std::vector<FieldElem> Field::elements() const {
    std::vector<FieldElem> out;
    out.reserve(q());
    for (int v = 0; v < q(); ++v) out.emplace_back(*this, v);
    return out;
}

FieldElem Field::elem(int value) const { return FieldElem(*this, value); }

}  // namespace avc
