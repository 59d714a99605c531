#include "doctest.h"
#include "gen.hpp"

#include "paradyn/exactring.hpp"

using namespace paradyn;

namespace {

RingPtr abc() {
    static RingPtr r = make_ring({"a", "b", "c"});
    return r;
}

MPoly P(const char* s) { return parse_mpoly(abc(), s); }

}  // namespace

TEST_CASE("canonical printing uses graded lex with signs between terms") {
    CHECK(P("c*a^2 + 0*b - b^2*a^2 + 4*a^3*c").str() == "4*a^3*c - a^2*b^2 + a^2*c");
    CHECK(P("-1").str() == "-1");
    CHECK(P("a - a").str() == "0");
    CHECK(P("3 + b").str() == "b + 3");
    CHECK(P("-a*b + 1").str() == "-a*b + 1");
}

TEST_CASE("exact division recovers factors and rejects remainders") {
    MPoly f = P("a^2 - b^2");
    CHECK(exact_div(f, P("a - b")) == P("a + b"));
    CHECK_THROWS_AS(exact_div(f, P("a - c")), InexactDivision);
    CHECK(exact_div(Integer(12), Integer(-4)) == -3);
    CHECK_THROWS_AS(exact_div(Integer(7), Integer(2)), InexactDivision);
}

TEST_CASE("mixing rings is an error") {
    RingPtr other = make_ring({"x"});
    CHECK_THROWS_AS(P("a") + MPoly::variable(other, 0), RingMismatch);
}

TEST_CASE("rational parsing accepts integers, fractions and decimals") {
    CHECK(parse_rational("-3") == -3);
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("-0.75") == Rational(-3, 4));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
}

TEST_CASE("ring axioms hold on random polynomials") {
    gen::Source src(11);
    for (int i = 0; i < 200; ++i) {
        MPoly x = src.mpoly(abc()), y = src.mpoly(abc()), z = src.mpoly(abc());
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x - x == MPoly(abc()));
    }
}

TEST_CASE("multiplication followed by exact division is the identity") {
    gen::Source src(12);
    for (int i = 0; i < 200; ++i) {
        MPoly x = src.mpoly(abc()), y = src.mpoly(abc());
        if (y.is_zero()) continue;
        CHECK(exact_div(x * y, y) == x);
    }
}

TEST_CASE("print then parse is a fixed point") {
    gen::Source src(13);
    for (int i = 0; i < 200; ++i) {
        MPoly x = src.mpoly(abc(), 8, 4, 1000);
        CHECK(parse_mpoly(abc(), x.str()) == x);
        CHECK(parse_mpoly(abc(), x.str()).str() == x.str());
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    gen::Source src(14);
    for (int i = 0; i < 200; ++i) {
        MPoly x = src.mpoly(abc()), y = src.mpoly(abc());
        std::vector<Rational> pt{src.rational(), src.rational(), src.rational()};
        CHECK((x * y).eval(pt) == x.eval(pt) * y.eval(pt));
        CHECK((x + y).eval(pt) == x.eval(pt) + y.eval(pt));
    }
}
