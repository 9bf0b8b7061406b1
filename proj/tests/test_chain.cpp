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

TEST_CASE("prem_chain: worked values") {
    auto ctx = tu::qq_ctx({"y", "x"});
    CHECK(prem_chain(P(ctx, "x"), tu::chain_of(ctx, {"x"})).is_zero());
    CHECK(prem_chain(P(ctx, "y*x + 1"), tu::chain_of(ctx, {"y"})) == P(ctx, "1"));
    CHECK(prem_chain(P(ctx, "x^2 - y^2"), tu::chain_of(ctx, {"y - 1"})) == P(ctx, "x^2 - 1"));
    // empty set: identity
    CHECK(prem_chain(P(ctx, "x^2 - y^2"), RegularChain<tu::QQ>(ctx)) == P(ctx, "x^2 - y^2"));
}

TEST_CASE("iterated resultant: worked values") {
    auto ctx = tu::qq_ctx({"y", "x"});
    CHECK(iterated_resultant(P(ctx, "5"), tu::chain_of(ctx, {"x^2 - 2", "y - 1"})) == P(ctx, "5"));
    CHECK(iterated_resultant(P(ctx, "5"), RegularChain<tu::QQ>(ctx)) == P(ctx, "5"));
    CHECK(iterated_resultant(P(ctx, "x"), tu::chain_of(ctx, {"x^2 - 2"})) == P(ctx, "-2"));
    auto r = iterated_resultant(P(ctx, "y*x"), tu::chain_of(ctx, {"x^2 - y", "y^2 - 1"}));
    REQUIRE(r.is_constant());
    CHECK((r == P(ctx, "1") || r == P(ctx, "-1")));
}

TEST_CASE("regularity test: worked values and free-variable property") {
    auto ctx = tu::qq_ctx({"y", "x"});
    CHECK(is_regular(P(ctx, "1"), tu::chain_of(ctx, {"y^2 - y", "x^2 - y"})));
    CHECK(is_regular(P(ctx, "x"), tu::chain_of(ctx, {"x^2 - 2"})));
    CHECK(!is_regular(P(ctx, "x"), tu::chain_of(ctx, {"x^2 - x"})));
    CHECK(!is_regular(P(ctx, "0"), tu::chain_of(ctx, {"x^2 - 2"})));

    // if mvar(p) is free w.r.t. T and init(p) is regular, then p is regular
    auto g7 = tu::gf_ctx(7, {"y", "x"});
    Var x = g7->vars.index_of("x");
    std::mt19937_64 rng(3);
    int checked = 0;
    for (int it = 0; it < 120; ++it) {
        auto t = tu::random_sparse(g7, rng, 3, 3);
        if (t.mvar() != g7->vars.index_of("y")) continue;
        auto T = tu::chain_of(g7, {to_string(t)});
        auto p = tu::random_sparse(g7, rng, 3, 5);
        if (p.mvar() != x) continue;
        if (!is_regular(init(p), T)) continue;
        CHECK(is_regular(p, T));
        ++checked;
    }
    CHECK(checked > 20);
}

TEST_CASE("prem_chain zero implies vanishing on the quasi-component") {
    auto g7 = tu::gf_ctx(7, {"y", "x"});
    std::mt19937_64 rng(17);
    int points_checked = 0;
    for (int it = 0; it < 60; ++it) {
        auto t1 = tu::random_sparse(g7, rng, 2, 3);
        auto t2 = tu::random_sparse(g7, rng, 2, 4);
        if (t1.mvar() != g7->vars.index_of("y") || t2.mvar() != g7->vars.index_of("x")) continue;
        RegularChain<tu::GF> T(g7);
        T = T.extended(t1, ChainCert::init_regular);
        if (!is_regular(init(t2), T)) continue;
        T = T.extended(t2, ChainCert::init_regular);

        // members of <T> reduce to zero and vanish on W(T)
        auto a = tu::random_sparse(g7, rng, 2, 3);
        auto b = tu::random_sparse(g7, rng, 2, 3);
        auto p = a * t1 + b * t2;
        REQUIRE(prem_chain(p, T).is_zero());
        auto w = quasi_component_points(T, 7);
        for (const auto& pt : w.points) {
            CHECK(eval_point(p, pt) == 0);
            ++points_checked;
        }
    }
    CHECK(points_checked > 0);
}

TEST_CASE("height and dim") {
    auto ctx = tu::qq_ctx({"z", "y", "x"});
    auto T = tu::chain_of(ctx, {"z^2 - 1", "y - z", "x^2 - z"});
    CHECK(T.height() == 3);
    CHECK(T.dim() == 0);
    auto lower = T.lower_than(ctx->vars.index_of("x"));
    CHECK(lower.height() == 2);
    CHECK(lower.dim() == 1);
    CHECK(RegularChain<tu::QQ>(ctx).dim() == 3);
    // persistence: lower part holds the same polynomials
    CHECK(lower.same_polys(tu::chain_of(ctx, {"z^2 - 1", "y - z"})));
}

TEST_CASE("rank order on triangular sets") {
    auto ctx = tu::qq_ctx({"y", "x"});
    RegularChain<tu::QQ> empty(ctx);
    CHECK(chain_rank_compare(empty, tu::chain_of(ctx, {"x"})) == Order::less);
    CHECK(chain_rank_compare(tu::chain_of(ctx, {"x"}), empty) == Order::greater);
    CHECK(chain_rank_compare(tu::chain_of(ctx, {"x"}), tu::chain_of(ctx, {"x^2"})) == Order::less);
    CHECK(chain_rank_compare(tu::chain_of(ctx, {"y", "x"}), tu::chain_of(ctx, {"y", "x"})) ==
          Order::similar);
    // longer chain with matching prefix has smaller rank
    CHECK(chain_rank_compare(tu::chain_of(ctx, {"y", "x"}), tu::chain_of(ctx, {"y"})) == Order::less);
    // the smallest algebraic variable decides
    CHECK(chain_rank_compare(tu::chain_of(ctx, {"y"}), tu::chain_of(ctx, {"x"})) == Order::less);
    CHECK(chain_rank_compare(tu::chain_of(ctx, {"y^2"}), tu::chain_of(ctx, {"y", "x"})) ==
          Order::greater);
    // similar iff equal rank sets
    CHECK(chain_rank_compare(tu::chain_of(ctx, {"y^2 - y", "x"}),
                             tu::chain_of(ctx, {"y^2 - 1", "x + y"})) == Order::similar);
}

TEST_CASE("process order") {
    auto ctx = tu::qq_ctx({"y", "x"});
    RegularChain<tu::QQ> empty(ctx);

    Process<tu::QQ> a{P(ctx, "y^3"), empty};
    Process<tu::QQ> b{P(ctx, "x"), empty};
    CHECK(process_compare(a, b) == Order::less);  // clause (i): greatest variable

    Process<tu::QQ> c{P(ctx, "x + 1"), tu::chain_of(ctx, {"x - 1"})};
    Process<tu::QQ> d{P(ctx, "x + 1"), empty};
    CHECK(process_compare(c, d) == Order::less);  // clause (ii): smaller dim

    auto T = tu::chain_of(ctx, {"y"});
    Process<tu::QQ> e{P(ctx, "x"), T};
    Process<tu::QQ> f{P(ctx, "x^2"), T};
    CHECK(process_compare(e, f) == Order::less);  // clause (iv): polynomial rank

    Process<tu::QQ> g{P(ctx, "x"), tu::chain_of(ctx, {"y"})};
    Process<tu::QQ> h{P(ctx, "x"), tu::chain_of(ctx, {"y^2"})};
    CHECK(process_compare(g, h) == Order::less);  // clause (iii): chain rank

    // constants over the empty chain compare as similar
    Process<tu::QQ> i{P(ctx, "5"), empty};
    Process<tu::QQ> j{P(ctx, "7"), empty};
    CHECK(process_compare(i, j) == Order::similar);
}

TEST_CASE("canonical split ordering is deterministic") {
    auto ctx = tu::qq_ctx({"y", "x"});
    Split<tu::QQ> s;
    s.push_back(tu::chain_of(ctx, {"y - 1", "x - y"}));
    s.push_back(tu::chain_of(ctx, {"y"}));
    s.push_back(tu::chain_of(ctx, {"y - 1", "x - y"}));  // duplicate
    s.push_back(tu::chain_of(ctx, {"x^2 - 1"}));
    canonical_sort(s);
    REQUIRE(s.size() == 3);  // dedup
    CHECK(s[0].height() == 1);
    CHECK(s[1].height() == 1);
    CHECK(s[2].height() == 2);
    // sorted by chain rank: {y} before {x^2-1}
    CHECK(s[0].top() == P(ctx, "y"));
    CHECK(s[1].top() == P(ctx, "x^2 - 1"));
}
