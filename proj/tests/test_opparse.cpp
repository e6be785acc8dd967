#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ddpoly/opparse.hpp"

#include <random>

using namespace ddpoly;

namespace {

FieldPtr qx_field() {
    return std::make_shared<GroundField>(
        Signature(2, 1), std::vector<std::string>{"x"},
        std::vector<DerivationAction>{DerivationAction{0}, DerivationAction{}},
        std::vector<TranslationAction>{
            TranslationAction{TranslationAction::Kind::shift, 0}});
}

}  // namespace

TEST_CASE("operator expressions") {
    auto F = qx_field();
    TermOrder ord = TermOrder::ord_graded();

    OreOperator op = parse_operator("(x^2+1)*d1^2*a1 + 3*d2", F);
    CHECK(op.terms().size() == 2);
    CHECK(op.to_text(ord) == "(x^2 + 1)*d1^2*a1 + 3*d2");

    // multiplication applies the commutation rules
    OreOperator left = parse_operator("d1*x", F);
    OreOperator right = parse_operator("x*d1 + 1", F);
    CHECK(left == right);

    CHECK(parse_operator("d1^3", F).ord() == 3);
    CHECK(parse_operator("0", F).is_zero());
    CHECK(parse_operator("3/2*x", F) ==
          OreOperator::scalar(F, F->indeterminate(0) *
                                     RatFunc::constant(1, Rational(3, 2))));
    CHECK(parse_operator("x^-1", F) ==
          OreOperator::scalar(F, F->indeterminate(0).inverse()));
}

TEST_CASE("module element expressions") {
    auto F = qx_field();
    ModuleElement v = parse_element("d1^2*e1 + a1*e1 - e2", F, 2);
    CHECK(v.terms().size() == 3);
    CHECK(v.rank() == 2);

    // e markers must end their term
    CHECK_THROWS_AS(parse_element("e1*d1", F, 2), ParseError);
    CHECK_THROWS_AS(parse_element("e3", F, 2), ParseError);
    CHECK_THROWS_AS(parse_element("d1*e1 + x", F, 2), ParseError);
    // negative operator powers stay rejected
    CHECK_THROWS_AS(parse_element("a1^-1*e1", F, 2), ParseError);
}

TEST_CASE("parse errors carry positions") {
    auto F = qx_field();
    try {
        parse_operator("d1 + @", F, 7);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 7);
        CHECK(e.column() == 6);
    }
    try {
        parse_operator("d1^", F);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.column() == 4);
    }
}

TEST_CASE("printing round-trips through the parser") {
    auto F = qx_field();
    TermOrder ord = TermOrder::ord_graded();
    std::mt19937 rng(13579);
    std::uniform_int_distribution<int> expo(0, 2);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> xdeg(0, 2);
    std::uniform_int_distribution<int> comp(0, 1);
    const Signature& sig = F->signature();

    for (int iter = 0; iter < 40; ++iter) {
        OreOperator op(F);
        ModuleElement el(F, 2);
        for (int t = 0; t < 3; ++t) {
            Polynomial c(1);
            Polynomial::Key key{static_cast<unsigned>(xdeg(rng))};
            c.add_term(key, Rational(coeff(rng)));
            Exponent e = Exponent::make(sig, {expo(rng), expo(rng)}, {expo(rng)});
            op.add_term(e, RatFunc::of(c));
            el.add_term(ModTerm{comp(rng), e}, RatFunc::of(c));
        }
        if (!op.is_zero()) {
            CHECK(parse_operator(op.to_text(ord), F) == op);
        }
        if (!el.is_zero()) {
            CHECK(parse_element(el.to_text(ord), F, 2) == el);
        }
    }
}
