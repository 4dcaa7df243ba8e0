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

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace avc {

/// Exact rational on int64 with normalized sign and gcd-reduced terms.
/// All bound values in this project stay far below the overflow guard;
/// intermediates go through __int128 and are range-checked on the way out.
class Rational {
   public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) { assign(n, d); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_integer() const { return den_ == 1; }

    /// floor(num/den), exact for negative values as well.
    long long floor() const {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }

    Rational operator+(const Rational& o) const {
        return make(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return make(i128(num_) * o.den_ - i128(o.num_) * den_, i128(den_) * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return make(i128(num_) * o.num_, i128(den_) * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::domain_error("rational division by zero");
        return make(i128(num_) * o.den_, i128(den_) * o.num_);
    }
    Rational operator-() const { return Rational(-num_, den_); }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return i128(num_) * o.den_ < i128(o.num_) * den_; }
    bool operator<=(const Rational& o) const { return i128(num_) * o.den_ <= i128(o.num_) * den_; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    /// "7" for integers, "7/3" otherwise.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Decimal expansion truncated toward zero, e.g. trunc(3) of 4/11 is "0.363".
    std::string truncated(int decimals) const {
        long long scale = 1;
        for (int i = 0; i < decimals; ++i) scale *= 10;
        bool neg = num_ < 0;
        i128 scaled = i128(neg ? -num_ : num_) * scale / den_;
        long long whole = (long long)(scaled / scale), frac = (long long)(scaled % scale);
        std::string f = std::to_string(frac);
        f.insert(0, decimals - f.size(), '0');
        return (neg ? "-" : "") + std::to_string(whole) + "." + f;
    }

    static Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
    static Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

   private:
    using i128 = __int128;

    static Rational make(i128 n, i128 d) {
        if (d < 0) { n = -n; d = -d; }
        i128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        Rational r;
        r.num_ = narrow(n);
        r.den_ = narrow(d);
        return r;
    }

    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) { i128 t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }

    static long long narrow(i128 v) {
        if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("rational overflow");
        return (long long)v;
    }

    void assign(long long n, long long d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        Rational r = make(n, d);
        num_ = r.num_;
        den_ = r.den_;
    }

    long long num_;
    long long den_;
};

}  // namespace avc
