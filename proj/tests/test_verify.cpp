/*
   Copyright 2026 The trisect authors

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

#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace trisect;
using tu::P;

namespace {
std::vector<std::uint64_t> pt(std::initializer_list<std::uint64_t> v) { return {v}; }
}  // namespace

TEST_CASE("variety enumeration: worked values") {
    auto g3 = tu::gf_ctx(3, {"y", "x"});

    auto ps = enumerate_variety(g3, {P(g3, "x^2 + y")}, 3);
    CHECK(ps.points == std::set<std::vector<std::uint64_t>>{pt({0, 0}), pt({2, 1}), pt({2, 2})});

    CHECK(enumerate_variety(g3, {P(g3, "1")}, 3).points.empty());

    auto g2 = tu::gf_ctx(2, {"y", "x"});
    CHECK(enumerate_variety(g2, std::vector<Polynomial<tu::GF>>{}, 2).points.size() == 4);

    // reduction from the rationals
    auto ctx = tu::qq_ctx({"y", "x"});
    auto qs = enumerate_variety(ctx, {P(ctx, "x^2 + y")}, 3);
    CHECK(qs.points == ps.points);

    // denominator divisible by the prime: bad prime
    CHECK_THROWS_AS(enumerate_variety(ctx, {P(ctx, "1/3*x + 1")}, 3), BadPrime);

    // enumeration cap
    auto big = tu::gf_ctx(101, {"z", "y", "x"});
    CHECK_THROWS_AS(enumerate_variety(big, std::vector<Polynomial<tu::GF>>{}, 101),
                    std::invalid_argument);
}

TEST_CASE("quasi-component points: worked values") {
    auto g3 = tu::gf_ctx(3, {"y", "x"});

    // {x y} as a chain with initial y: x = 0, y != 0
    auto c1 = tu::chain_of(g3, {"x*y"});
    CHECK(quasi_component_points(c1, 3).points ==
          std::set<std::vector<std::uint64_t>>{pt({1, 0}), pt({2, 0})});

    auto c2 = tu::chain_of(g3, {"y"});
    CHECK(quasi_component_points(c2, 3).points ==
          std::set<std::vector<std::uint64_t>>{pt({0, 0}), pt({0, 1}), pt({0, 2})});

    auto g2 = tu::gf_ctx(2, {"t"});
    RegularChain<tu::GF> empty(g2);
    CHECK(quasi_component_points(empty, 2).points.size() == 2);
}

TEST_CASE("oracle self-consistency") {
    auto g7 = tu::gf_ctx(7, {"y", "x"});
    std::mt19937_64 rng(123);
    int done = 0;
    while (done < 20) {
        auto t1 = tu::random_sparse(g7, rng, 2, 3);
        auto t2 = tu::random_sparse(g7, rng, 3, 4);
        if (t1.mvar() != g7->vars.index_of("y") || t2.mvar() != g7->vars.index_of("x")) continue;
        RegularChain<tu::GF> T(g7);
        T = T.extended(t1, ChainCert::init_regular);
        if (!is_regular(init(t2), T)) continue;
        T = T.extended(t2, ChainCert::init_regular);

        auto w = quasi_component_points(T, 7);
        auto v = enumerate_variety(g7, T.polys(), 7);
        auto h = T.initials_product();
        for (const auto& p : w.points) {
            CHECK(v.contains(p));
            CHECK(eval_point(h, p) != 0);
        }
        ++done;
    }
}

TEST_CASE("split checks: worked decompositions and negative control") {
    auto ctx = tu::qq_ctx({"y", "x"});

    SECTION("xy decomposition passes over GF(3)") {
        std::vector<Polynomial<tu::QQ>> sys{P(ctx, "x*y")};
        auto result = tu::split_of(ctx, {{"x*y"}, {"y"}});
        auto rep = check_triangularize(sys, result, 3, Mode::lazard_wu, ctx);
        REQUIRE(rep.applicable);
        CHECK(rep.pass);
        // both sides cover the 5 points of V(xy) over GF(3)
        std::set<std::vector<std::uint64_t>> covered;
        for (const auto& c : result) {
            auto w = quasi_component_points(c, 3);
            covered.insert(w.points.begin(), w.points.end());
        }
        CHECK(covered.size() == 5);
    }
    SECTION("circle-line decomposition passes over GF(7)") {
        std::vector<Polynomial<tu::QQ>> sys{P(ctx, "x^2 + y^2 - 1"), P(ctx, "x - y")};
        auto result = tu::split_of(ctx, {{"2*y^2 - 1", "x - y"}});
        auto rep = check_triangularize(sys, result, 7, Mode::lazard_wu, ctx);
        REQUIRE(rep.applicable);
        CHECK(rep.pass);
        auto w = quasi_component_points(result[0], 7);
        CHECK(w.points == std::set<std::vector<std::uint64_t>>{pt({2, 2}), pt({5, 5})});
    }
    SECTION("dropping a chain is caught with a witness") {
        std::vector<Polynomial<tu::QQ>> sys{P(ctx, "x*y")};
        auto corrupted = tu::split_of(ctx, {{"x*y"}});
        auto rep = check_triangularize(sys, corrupted, 3, Mode::lazard_wu, ctx);
        REQUIRE(rep.applicable);
        CHECK(!rep.pass);
        CHECK(!rep.missing_points.empty());
    }
    SECTION("adding a wrong chain is caught as an extra point") {
        std::vector<Polynomial<tu::QQ>> sys{P(ctx, "x*y")};
        auto corrupted = tu::split_of(ctx, {{"x*y"}, {"y"}, {"y - 1", "x - 1"}});
        auto rep = check_triangularize(sys, corrupted, 3, Mode::lazard_wu, ctx);
        REQUIRE(rep.applicable);
        CHECK(!rep.pass);
        CHECK(!rep.extra_points.empty());
    }
    SECTION("bad primes are skipped, not failed") {
        std::vector<Polynomial<tu::QQ>> sys{P(ctx, "2*x - 1")};
        auto result = tu::split_of(ctx, {{"2*x - 1"}});
        auto rep = check_triangularize(sys, result, 2, Mode::lazard_wu, ctx);
        CHECK(!rep.applicable);
        CHECK(!rep.skip_reason.empty());
    }
}

TEST_CASE("kalkbrener-mode checks flag closure points instead of failing") {
    auto ctx = tu::qq_ctx({"y", "x"});
    // W({y*x - 1}) misses nothing here, but a pruned height-2 chain can leave
    // V(F) points only covered at closure level.
    std::vector<Polynomial<tu::QQ>> sys{P(ctx, "(x^2 + y^2 - 1)*(x - y)")};
    SolveOptions opts;
    opts.mode = Mode::kalkbrener;
    Engine<tu::QQ> eng(ctx, opts);
    auto split = eng.triangularize(sys);
    auto rep = check_triangularize(sys, split, 7, Mode::kalkbrener, ctx);
    REQUIRE(rep.applicable);
    CHECK(rep.pass);  // union inside V(F)
    // the closure direction is certified symbolically
    for (const auto& c : split) CHECK(radical_membership(eng, sys[0], c));
}

TEST_CASE("radical membership: worked values") {
    auto ctx = tu::qq_ctx({"y", "x"});
    SolveOptions opts;
    Engine<tu::QQ> eng(ctx, opts);
    auto T = tu::chain_of(ctx, {"y^2 - y"});
    CHECK(radical_membership(eng, P(ctx, "y^2 - y"), T));
    CHECK(!radical_membership(eng, P(ctx, "y"), T));
    CHECK(radical_membership(eng, P(ctx, "y*(y - 1)*(y + 2)"), T));
}

TEST_CASE("rational-point checks across several primes") {
    auto ctx = tu::qq_ctx({"y", "x"});
    SolveOptions opts;
    Engine<tu::QQ> eng(ctx, opts);
    std::vector<Polynomial<tu::QQ>> sys{P(ctx, "x^2 - y^2"), P(ctx, "y^2 - 2*y")};
    auto split = eng.triangularize(sys);
    for (std::uint64_t p : {5ull, 7ull, 11ull, 13ull}) {
        auto rep = check_triangularize(sys, split, p, Mode::lazard_wu, ctx);
        INFO(rep.summary());
        REQUIRE(rep.applicable);
        CHECK(rep.pass);
    }
}
