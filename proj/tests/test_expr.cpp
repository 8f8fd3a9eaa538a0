#include <doctest.h>

#include "cgt/expr.hpp"
#include "cgt/parse.hpp"

using namespace cgt;

namespace {

// H and Hhat of the worked poset instance: H = ((*2+*3):[*2]*5)+(*4:[*1]*6),
// Hhat = ((*5+*4):[*2]*2)+(*3:[*1]*1).
ExprPtr make_h() { return parse("((*2 + *3) :[*2] *5) + (*4 :[*1] *6)"); }
ExprPtr make_hhat() { return parse("((*5 + *4) :[*2] *2) + (*3 :[*1] *1)"); }

ExprPtr final_example() {
    return Expr::make_ordinal_sum_sub(Expr::make_nimber(1), make_h(),
                                      make_hhat());
}

}  // namespace

TEST_CASE("vset_of on the worked examples") {
    CHECK(vset_of(parse("*2 + *3")) == NatSet{0, 2, 3});
    CHECK(vset_of(parse("(*2 + *3) :[*2] *5")) ==
          NatSet{0, 1, 2, 3, 4, 5, 6, 7});
    CHECK(vset_of(parse("*4 :[*1] *6")) ==
          NatSet{0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
    CHECK(vset_of(make_h()) == NatSet{0, 1, 8, 9, 10, 11, 12, 13, 14, 15});
    CHECK(vset_of(parse("*5 + *4")) == NatSet{0, 4, 5, 6, 7});
    CHECK(vset_of(parse("(*5 + *4) :[*2] *2")) == NatSet{0, 1, 2, 6, 7, 8, 9});
    CHECK(vset_of(final_example()) ==
          NatSet{0, 1, 7, 9, 10, 11, 12, 13, 14, 15, 16});
}

TEST_CASE("grundy_of") {
    for (std::uint64_t n = 0; n <= 6; ++n)
        CHECK(grundy_of(Expr::make_nimber(n)) == n);
    CHECK(grundy_of(make_hhat()) == 7);
    CHECK(grundy_of(final_example()) == 2);
}

TEST_CASE("outcome_of") {
    CHECK(outcome_of(Expr::make_nimber(0)) == Outcome::P);
    CHECK(outcome_of(Expr::make_nimber(3)) == Outcome::N);
    CHECK(outcome_of(final_example()) == Outcome::N);
    // o(H) = P, o(G) = N, o(Hhat) = P gives N.
    ExprPtr e = Expr::make_ordinal_sum_sub(
        Expr::make_nimber(1), Expr::make_nimber(0), Expr::make_nimber(0));
    CHECK(outcome_of(e) == Outcome::N);
}

TEST_CASE("substitution outcome table matches the variation-set route") {
    const std::uint64_t vals[] = {0, 1, 2};
    for (auto g : vals)
        for (auto h : vals)
            for (auto s : vals) {
                ExprPtr e = Expr::make_ordinal_sum_sub(Expr::make_nimber(g),
                                                       Expr::make_nimber(h),
                                                       Expr::make_nimber(s));
                Outcome by_vset =
                    vset_of(e).contains(0) ? Outcome::N : Outcome::P;
                CHECK(outcome_of(e) == by_vset);
            }
}

TEST_CASE("explicit leaves require an arena") {
    GameArena a;
    ExprPtr e = Expr::make_explicit(a.nimber(3));
    CHECK_THROWS_AS(vset_of(e), std::invalid_argument);
    CHECK(vset_of(e, &a) == NatSet{0, 1, 2});
}

TEST_CASE("chain closed form on the worked example") {
    ChainSpec c{{6, 3, 9, 2, 1, 2, 5}, {10, 1, 5, 5, 0, 3}};
    CHECK(chain_suffix_sums(c) ==
          std::vector<long long>{4, -2, 5, -3, 0, 4, 2});
    CHECK(chain_p(c) == 3);
    CHECK(chain_grundy(c) == 10);
    CHECK(grundy_of(chain_expr(c)) == 10);
}

TEST_CASE("chain edge cases") {
    CHECK(chain_grundy(ChainSpec{{5}, {}}) == 5);
    CHECK(chain_p(ChainSpec{{5}, {}}) == 0);
    CHECK(chain_p(ChainSpec{{0, 0}, {1}}) == 1);
    CHECK(chain_p(ChainSpec{{2, 3, 4}, {1, 1}}) == 0);
    CHECK_THROWS_AS(chain_grundy(ChainSpec{{1, 2}, {3, 4}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(chain_grundy(ChainSpec{{}, {}}), std::invalid_argument);
}

TEST_CASE("single-step chains agree with the two-term closed form") {
    // G(*a :_*bh *b) is a+b when b >= bh, else b.
    for (std::uint64_t x = 0; x <= 4; ++x)
        for (std::uint64_t b = 0; b <= 4; ++b)
            for (std::uint64_t bh = 0; bh <= 4; ++bh) {
                std::uint64_t want = b >= bh ? x + b : b;
                CHECK(chain_grundy(ChainSpec{{x, b}, {bh}}) == want);
            }
}

TEST_CASE("grundy substitution invariance at the expression level") {
    // Middle operand and substitution operand may be swapped for any
    // expression of equal Grundy value.
    ExprPtr g = parse("*2 + *3");
    ExprPtr h1 = parse("*3");
    ExprPtr h2 = parse("*1 + *2");  // Grundy 3 as well
    REQUIRE(grundy_of(h1) == grundy_of(h2));
    CHECK(grundy_of(Expr::make_ordinal_sum_sub(g, h1, parse("*2"))) ==
          grundy_of(Expr::make_ordinal_sum_sub(g, h2, parse("*2"))));
    CHECK(grundy_of(Expr::make_ordinal_sum_sub(g, parse("*4"), h1)) ==
          grundy_of(Expr::make_ordinal_sum_sub(g, parse("*4"), h2)));
}
