#include <doctest.h>

#include <random>

#include "cgt/oracle.hpp"
#include "cgt/parse.hpp"

using namespace cgt;

TEST_CASE("atoms") {
    ExprPtr e = parse("*3");
    CHECK(e->kind() == ExprKind::Nimber);
    CHECK(e->nimber_value() == 3);
    CHECK(parse("0")->nimber_value() == 0);
    CHECK(parse("  ( *7 ) ")->nimber_value() == 7);
}

TEST_CASE("operators and shapes") {
    ExprPtr e = parse("*1 :[*3] *2");
    REQUIRE(e->kind() == ExprKind::OrdinalSumSub);
    CHECK(e->left()->nimber_value() == 1);
    CHECK(e->right()->nimber_value() == 2);
    CHECK(e->subst()->nimber_value() == 3);

    ExprPtr h = parse("((*2 + *3) :[*2] *5) + (*4 :[*1] *6)");
    REQUIRE(h->kind() == ExprKind::Sum);
    CHECK(h->left()->kind() == ExprKind::OrdinalSumSub);
    CHECK(h->right()->kind() == ExprKind::OrdinalSumSub);
    CHECK(h->left()->left()->kind() == ExprKind::Sum);
}

TEST_CASE("the seven-term chain example parses left-associated") {
    ExprPtr e =
        parse("*6 :[*10] *3 :[*1] *9 :[*5] *2 :[*5] *1 :[*0] *2 :[*3] *5");
    ChainSpec c{{6, 3, 9, 2, 1, 2, 5}, {10, 1, 5, 5, 0, 3}};
    CHECK(structurally_equal(*e, *chain_expr(c)));
}

TEST_CASE("precedence and associativity fixtures") {
    CHECK(structurally_equal(
        *parse("*1 + *2 : *3"),
        *Expr::make_sum(Expr::make_nimber(1),
                        Expr::make_ordinal_sum(Expr::make_nimber(2),
                                               Expr::make_nimber(3)))));
    CHECK(structurally_equal(
        *parse("*1 : *2 : *3"),
        *Expr::make_ordinal_sum(
            Expr::make_ordinal_sum(Expr::make_nimber(1), Expr::make_nimber(2)),
            Expr::make_nimber(3))));
}

TEST_CASE("parse errors carry a position") {
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("*"), ParseError);
    CHECK_THROWS_AS(parse("*1 +"), ParseError);
    CHECK_THROWS_AS(parse("(*1"), ParseError);
    CHECK_THROWS_AS(parse("*1 :[*2 *3"), ParseError);
    try {
        parse("*1 ? *2");
        FAIL("expected a ParseError");
    } catch (const ParseError& ex) {
        CHECK(ex.byte_offset == 3);
        CHECK(!ex.expected.empty());
    }
    try {
        parse("*1 *2");
        FAIL("expected a ParseError");
    } catch (const ParseError& ex) {
        CHECK(ex.byte_offset == 3);
    }
}

TEST_CASE("render") {
    CHECK(render(Expr::make_nimber(0)) == "*0");
    CHECK(render(parse("*1 :[*3] *2")) == "*1 :[*3] *2");
    CHECK(render(parse("*1 + *2 : *3")) == "*1 + *2 : *3");
    CHECK(render(parse("(*1 + *2) : *3")) == "(*1 + *2) : *3");
    GameArena a;
    CHECK_THROWS_AS(render(Expr::make_explicit(a.nimber(1))),
                    std::invalid_argument);
}

TEST_CASE("parse after render is the identity") {
    GenConfig cfg;
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 1000; ++trial) {
        ExprPtr e = random_expr(cfg, rng);
        CHECK(structurally_equal(*parse(render(e)), *e));
    }
}
