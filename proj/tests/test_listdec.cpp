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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "avc/listdec.hpp"
#include "avc/rng.hpp"

using namespace avc;

namespace {

std::vector<int> random_message(const Code& code, Rng& rng) {
    std::vector<int> msg((size_t)code.dim());
    for (auto& v : msg) v = (int)rng.below((uint64_t)code.field().q());
    return msg;
}

MPoly message_poly(const Code& code, const std::vector<int>& msg) {
    MPoly p(code.field(), code.family().arity());
    size_t i = 0;
    for (const auto& m : code.family().monomials()) p.add_term(m, msg[i++]);
    return p;
}

std::vector<int> corrupt(const std::vector<int>& sent, long long e, const Field& f, Rng& rng) {
    std::vector<int> word = sent;
    std::vector<size_t> pos(word.size());
    for (size_t i = 0; i < pos.size(); ++i) pos[i] = i;
    for (long long i = 0; i < e; ++i) {
        size_t j = (size_t)i + (size_t)rng.below((uint64_t)(word.size() - i));
        std::swap(pos[(size_t)i], pos[j]);
        int wrong = (int)rng.below((uint64_t)(f.q() - 1));
        if (wrong >= word[pos[(size_t)i]]) ++wrong;
        word[pos[(size_t)i]] = wrong;
    }
    return word;
}

// Every message of a tiny code, for oracle list decoding.
std::vector<std::vector<int>> all_codewords(const Code& code) {
    long long total = 1;
    for (long long i = 0; i < code.dim(); ++i) total *= code.field().q();
    std::vector<std::vector<int>> out;
    for (long long idx = 0; idx < total; ++idx) {
        std::vector<int> msg((size_t)code.dim());
        long long v = idx;
        for (auto& x : msg) { x = (int)(v % code.field().q()); v /= code.field().q(); }
        out.push_back(code.encode(msg));
    }
    return out;
}

}  // namespace

TEST_CASE("constraint counts") {
    CHECK(n_constraints(2, 2) == 4);
    CHECK(n_constraints(1, 1) == 1);
    CHECK(n_constraints(2, 4) == 20);
    CHECK(n_constraints(2, 20) == 1540);
}

TEST_CASE("b_set basics") {
    GridShape shape({2, 2});
    DTable dtable(shape);
    auto fam1 = MonomialFamily::explicit_list({Monomial({0, 0})}, shape);
    // A trivial family has border {1}, so every Z-degree sees the same set.
    auto b0 = b_set(0, 1, 2, shape, fam1, BoundMethod::RecursiveD, dtable);
    auto b5 = b_set(5, 1, 2, shape, fam1, BoundMethod::RecursiveD, dtable);
    CHECK(b0 == b5);

    // E = n-1 at r = 1: only monomials with dzero = 0 pass, i.e. K = 1.
    auto tight = b_set(1, 3, 1, shape, fam1, BoundMethod::RecursiveD, dtable);
    CHECK(tight == std::vector<Monomial>{Monomial({0, 0})});

    // Brute-force check against dzero on a small family.
    auto fam = MonomialFamily::total_degree(1, shape);
    for (int i = 0; i <= 3; ++i) {
        auto b = b_set(i, 1, 2, shape, fam, BoundMethod::RecursiveD, dtable);
        std::set<Monomial> got(b.begin(), b.end());
        for (const auto& k : delta_set(2, shape)) {
            bool ok = true;
            for (const auto& m : fam.border()) {
                Monomial prod = k * m.pow(i);
                ok = ok && dzero(prod, 2, shape, BoundMethod::RecursiveD, dtable) < Rational(3);
            }
            CHECK(got.count(k) == (size_t)ok);
        }
    }
}

TEST_CASE("plan support-count identity and trimming") {
    Field f = Field::make(5, 1);
    GridShape shape({5, 5});
    DTable dtable(shape);
    auto fam = MonomialFamily::total_degree(1, shape);
    auto maxr = max_radius(2, shape, fam, BoundMethod::RecursiveD, dtable);
    REQUIRE(maxr.has_value());
    for (long long e = 0; e <= *maxr; ++e) {
        DecoderPlan p = plan(2, e, shape, fam, BoundMethod::RecursiveD, dtable);
        CHECK(p.support_count() == shape.n() * n_constraints(2, 2) + 1);
        CHECK(p.t >= 1);
        CHECK((int)p.supports.size() == p.t + 1);
        // nesting of the untrimmed levels
        for (int i = 0; i + 2 < (int)p.supports.size(); ++i) {
            std::set<Monomial> outer(p.supports[i].begin(), p.supports[i].end());
            for (const auto& k : p.supports[i + 1]) CHECK(outer.count(k) == 1);
        }
    }
    CHECK_THROWS_AS(plan(2, *maxr + 1, shape, fam, BoundMethod::RecursiveD, dtable), Error);
}

TEST_CASE("feasibility is monotone in E: binary search agrees with linear scan") {
    for (auto sizes : {std::vector<int>{4, 4}, {8, 8}, {4, 2, 2}}) {
        GridShape shape(sizes);
        DTable dtable(shape);
        auto fam = MonomialFamily::total_degree(1, shape);
        for (int r = 1; r <= 2; ++r)
            for (auto method : {BoundMethod::RecursiveD, BoundMethod::SchwartzZippel}) {
                if (shape.arity() != 2 && method == BoundMethod::ClosedFormC) continue;
                auto fast = max_radius(r, shape, fam, method, dtable);
                std::optional<long long> slow;
                for (long long e = 0; e < shape.n(); ++e) {
                    bool ok = true;
                    try {
                        plan(r, e, shape, fam, method, dtable);
                    } catch (const Error&) {
                        ok = false;
                    }
                    if (ok)
                        slow = e;
                    else
                        break;
                }
                CHECK(fast == slow);
            }
    }
}

TEST_CASE("reference radii for the weighted family on the 128x64 grid") {
    GridShape shape({128, 64});
    DTable dtable(shape);
    auto fam = MonomialFamily::weighted({1, 2}, 3, shape);
    CHECK(max_radius(2, shape, fam, BoundMethod::RecursiveD, dtable) == 5129);
    CHECK(max_radius(2, shape, fam, BoundMethod::ClosedFormC, dtable) == 5105);
    CHECK(max_radius(2, shape, fam, BoundMethod::SchwartzZippel, dtable) == 4895);
    // feasibility flips exactly past the radius
    CHECK_NOTHROW(plan(2, 5129, shape, fam, BoundMethod::RecursiveD, dtable));
    CHECK_THROWS_AS(plan(2, 5130, shape, fam, BoundMethod::RecursiveD, dtable), Error);
}

TEST_CASE("reference radii for the total-degree family on the 80x80 grid") {
    GridShape shape({80, 80});
    DTable dtable(shape);
    auto fam = MonomialFamily::total_degree(20, shape);
    CHECK(max_radius(2, shape, fam, BoundMethod::RecursiveD, dtable) == 1279);
    CHECK(max_radius(2, shape, fam, BoundMethod::ClosedFormC, dtable) == 1279);
    CHECK(max_radius(2, shape, fam, BoundMethod::SchwartzZippel, dtable) == 999);
}

TEST_CASE("degenerate radius: no correctable error count") {
    // Box family bounds (41, 21) on the 128x64 grid at r = 2 under SZ: even
    // E = 0 admits no plan.
    GridShape shape({128, 64});
    DTable dtable(shape);
    auto fam = MonomialFamily::box({41, 21}, shape);
    CHECK(!max_radius(2, shape, fam, BoundMethod::SchwartzZippel, dtable).has_value());
}

TEST_CASE("interpolation constraints hold with multiplicity") {
    Field f = Field::make(5, 1);
    Code code(PointEnsemble::full_grid(f, 2),
              MonomialFamily::total_degree(1, GridShape({5, 5})));
    DTable dtable(code.ensemble().shape());
    auto maxr = max_radius(2, code.ensemble().shape(), code.family(),
                           BoundMethod::RecursiveD, dtable);
    REQUIRE(maxr.has_value());
    DecoderPlan p =
        plan(2, *maxr, code.ensemble().shape(), code.family(), BoundMethod::RecursiveD, dtable);

    Rng rng(3);
    for (int trial = 0; trial < 3; ++trial) {
        std::vector<int> received((size_t)code.n());
        for (auto& v : received) v = (int)rng.below(5);
        ZPoly q = interpolate(p, code.ensemble(), received);
        CHECK(!q.is_zero());
        for (int i = 0; i < (int)p.supports.size() && i <= q.deg_z(); ++i) {
            std::set<Monomial> allowed(p.supports[i].begin(), p.supports[i].end());
            for (const auto& [mono, c] : q.coeff(i).terms()) CHECK(allowed.count(mono) == 1);
        }
        MPoly flat = q.as_mpoly();
        for (long long v = 0; v < code.n(); ++v) {
            std::vector<int> pt = code.ensemble().point(v);
            pt.push_back(received[(size_t)v]);
            CHECK(flat.multiplicity_at(pt).value() >= 2);
        }
    }

    // Exact codeword in: the interpolation polynomial must vanish on it.
    std::vector<int> msg = random_message(code, rng);
    MPoly fp = message_poly(code, msg);
    ZPoly q = interpolate(p, code.ensemble(), code.encode(msg));
    CHECK(q.substitute_z(fp).is_zero());
}

TEST_CASE("trivial interpolation at r = 1 on the repetition family") {
    Field f = Field::make(5, 1);
    Code code(PointEnsemble::full_grid(f, 2),
              MonomialFamily::explicit_list({Monomial({0, 0})}, GridShape({5, 5})));
    DTable dtable(code.ensemble().shape());
    auto maxr = max_radius(1, code.ensemble().shape(), code.family(),
                           BoundMethod::RecursiveD, dtable);
    REQUIRE(maxr.has_value());
    DecoderPlan p =
        plan(1, *maxr, code.ensemble().shape(), code.family(), BoundMethod::RecursiveD, dtable);
    std::vector<int> received((size_t)code.n(), 3);
    ZPoly q = interpolate(p, code.ensemble(), received);
    for (long long v = 0; v < code.n(); ++v) {
        std::vector<int> pt = code.ensemble().point(v);
        CHECK(q.evaluate(pt, 3) == 0);
    }
}

TEST_CASE("z_roots on constructed factorizations") {
    Field f = Field::make(5, 1);
    GridShape shape({5, 5});
    PointEnsemble ens = PointEnsemble::full_grid(f, 2);
    auto fam = MonomialFamily::total_degree(1, shape);

    MPoly x1 = MPoly::monomial_term(f, Monomial({1, 0}), 1);
    MPoly one = MPoly::constant(f, 2, 1);
    // (Z - X1)(Z - 1) = Z^2 - (X1+1) Z + X1
    ZPoly q({x1, -(x1 + one), one});
    auto roots = z_roots(q, fam, ens);
    REQUIRE(roots.size() == 2);
    CHECK(std::count(roots.begin(), roots.end(), x1) == 1);
    CHECK(std::count(roots.begin(), roots.end(), one) == 1);

    // Z^2 - X1 has no root with support in the family.
    ZPoly q2({-x1, MPoly::zero(f, 2), one});
    CHECK(z_roots(q2, fam, ens).empty());

    CHECK_THROWS_AS(z_roots(ZPoly(f, 2), fam, ens), Error);
}

TEST_CASE("z_roots finds both roots of random split polynomials") {
    Field f = Field::make(5, 1);
    GridShape shape({5, 5});
    PointEnsemble ens = PointEnsemble::full_grid(f, 2);
    auto fam = MonomialFamily::total_degree(2, shape);
    Rng rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        MPoly a(f, 2), b(f, 2);
        for (const auto& m : fam.monomials()) {
            a.add_term(m, (int)rng.below(5));
            b.add_term(m, (int)rng.below(5));
        }
        ZPoly q({a * b, -(a + b), MPoly::constant(f, 2, 1)});
        if (q.is_zero()) continue;
        auto roots = z_roots(q, fam, ens);
        if (a == b) {
            CHECK(std::count(roots.begin(), roots.end(), a) == 1);
        } else {
            CHECK(std::count(roots.begin(), roots.end(), a) == 1);
            CHECK(std::count(roots.begin(), roots.end(), b) == 1);
        }
        for (const auto& root : roots) CHECK(q.divide_linear_z(root).first);
    }
}

TEST_CASE("decode returns the exact codeword at distance zero") {
    Field f = Field::make(5, 1);
    Code code(PointEnsemble::full_grid(f, 2),
              MonomialFamily::total_degree(1, GridShape({5, 5})));
    DTable dtable(code.ensemble().shape());
    auto maxr = max_radius(2, code.ensemble().shape(), code.family(),
                           BoundMethod::RecursiveD, dtable);
    DecoderPlan p =
        plan(2, *maxr, code.ensemble().shape(), code.family(), BoundMethod::RecursiveD, dtable);
    Rng rng(31);
    std::vector<int> msg = random_message(code, rng);
    std::vector<int> sent = code.encode(msg);
    DecodeOutput out = decode(code, p, sent);
    REQUIRE(!out.items.empty());
    CHECK(out.items[0].distance == 0);
    CHECK(out.items[0].codeword == sent);
    CHECK(out.items[0].message_poly == message_poly(code, msg));
}

TEST_CASE("decode matches the exhaustive oracle across seeded trials") {
    Field f = Field::make(5, 1);
    Code code(PointEnsemble::full_grid(f, 2),
              MonomialFamily::total_degree(1, GridShape({5, 5})));
    DTable dtable(code.ensemble().shape());
    auto maxr = max_radius(2, code.ensemble().shape(), code.family(),
                           BoundMethod::RecursiveD, dtable);
    REQUIRE(maxr.has_value());
    DecoderPlan p =
        plan(2, *maxr, code.ensemble().shape(), code.family(), BoundMethod::RecursiveD, dtable);
    auto words = all_codewords(code);
    REQUIRE(words.size() == 125);

    Rng rng(47);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<int> msg = random_message(code, rng);
        std::vector<int> sent = code.encode(msg);
        std::vector<int> word = corrupt(sent, *maxr, f, rng);
        DecodeOutput out = decode(code, p, word);
        std::set<std::vector<int>> got;
        for (const auto& item : out.items) got.insert(item.codeword);
        CHECK(got.count(sent) == 1);
        for (const auto& cw : words)
            if (hamming_distance(cw, word) <= *maxr) CHECK(got.count(cw) == 1);
    }
}

TEST_CASE("decode of a word far from every codeword can be empty") {
    Field f = Field::make(5, 1);
    Code code(PointEnsemble::full_grid(f, 2),
              MonomialFamily::total_degree(1, GridShape({5, 5})));
    DTable dtable(code.ensemble().shape());
    DecoderPlan p =
        plan(2, 2, code.ensemble().shape(), code.family(), BoundMethod::RecursiveD, dtable);
    auto words = all_codewords(code);
    Rng rng(53);
    bool found = false;
    for (int attempt = 0; attempt < 200 && !found; ++attempt) {
        std::vector<int> word((size_t)code.n());
        for (auto& v : word) v = (int)rng.below(5);
        long long best = code.n();
        for (const auto& cw : words) best = std::min(best, hamming_distance(cw, word));
        if (best <= 2) continue;
        found = true;
        DecodeOutput out = decode(code, p, word);
        for (const auto& item : out.items) CHECK(item.distance > 2);
    }
    CHECK(found);
}

TEST_CASE("plan mismatch is rejected") {
    Field f = Field::make(5, 1);
    Code code(PointEnsemble::full_grid(f, 2),
              MonomialFamily::total_degree(1, GridShape({5, 5})));
    Code other(PointEnsemble::full_grid(f, 2),
               MonomialFamily::total_degree(2, GridShape({5, 5})));
    DTable dtable(code.ensemble().shape());
    DecoderPlan p =
        plan(2, 1, code.ensemble().shape(), code.family(), BoundMethod::RecursiveD, dtable);
    std::vector<int> word((size_t)code.n(), 0);
    CHECK_THROWS_AS(decode(other, p, word), Error);
    std::vector<int> short_word(3, 0);
    CHECK_THROWS_AS(decode(code, p, short_word), Error);
}
