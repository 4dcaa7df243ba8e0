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

#include <numeric>
#include <string>
#include <vector>

namespace avc {

/// Exponent vector (i_1, ..., i_m). Comparison is the lexicographic order
/// with X_m < ... < X_1, i.e. plain lexicographic comparison of the vector.
struct Monomial {
    std::vector<int> exps;

    Monomial() = default;
    explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}

    int arity() const { return (int)exps.size(); }

    int total_degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }

    bool divides(const Monomial& o) const {
        if (exps.size() != o.exps.size()) return false;
        for (size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > o.exps[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (size_t i = 0; i < exps.size(); ++i) r.exps[i] += o.exps[i];
        return r;
    }

    Monomial pow(int k) const {
        Monomial r(*this);
        for (auto& e : r.exps) e *= k;
        return r;
    }

    bool is_one() const {
        for (int e : exps)
            if (e != 0) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return exps == o.exps; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
    bool operator<(const Monomial& o) const { return exps < o.exps; }
    bool operator>(const Monomial& o) const { return o < *this; }

    /// "1", "X1^3", "X1*X2^2", ...
    std::string str() const {
        std::string s;
        for (size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += "X" + std::to_string(i + 1);
            if (exps[i] > 1) s += "^" + std::to_string(exps[i]);
        }
        return s.empty() ? "1" : s;
    }
};

}  // namespace avc
