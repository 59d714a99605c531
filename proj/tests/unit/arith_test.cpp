#include "doctest.h"
#include "gen.hpp"

#include "paradyn/arith.hpp"
#include "paradyn/linalg.hpp"

using namespace paradyn;

TEST_CASE("moebius values and the divisor-sum identity") {
    CHECK(moebius(1) == 1);
    CHECK(moebius(6) == 1);
    CHECK(moebius(12) == 0);
    CHECK(moebius(30) == -1);
    CHECK_THROWS(moebius(0));
    for (unsigned n = 1; n <= 200; ++n) CHECK(moebius_sum_check(n) == (n == 1 ? 1 : 0));
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1).str() == "T - 1");
    CHECK(cyclotomic(2).str() == "T + 1");
    CHECK(cyclotomic(3).str() == "T^2 + T + 1");
    CHECK(cyclotomic(6).str() == "T^2 - T + 1");
    CHECK(cyclotomic(12).str() == "T^4 - T^2 + 1");
    for (unsigned n = 1; n <= 24; ++n) {
        UniPoly prod = UniPoly::constant(Rational(1));
        for (auto m : divisors(n)) prod = prod * cyclotomic(m);
        CHECK(prod == UniPoly::monomial(Rational(1), n) - UniPoly::constant(Rational(1)));
    }
}

TEST_CASE("formal period counts and norm exponents") {
    CHECK(formal_period_count(2, 1) == 3);
    CHECK(formal_period_count(2, 2) == 2);
    CHECK(formal_period_count(2, 3) == 6);
    CHECK(formal_period_count(2, 4) == 12);
    CHECK(formal_period_count(3, 3) == 24);
    DegreeBook b(2);
    CHECK(b.N(1) == 1);
    CHECK(b.N(2) == 1);
    CHECK(b.N(3) == 15);
    CHECK(b.N(2, 1) == 2);
    CHECK(b.N(3, 1) == 6);
    CHECK(b.N(4, 2) == 12);
    CHECK(b.M(3) == 9);
    CHECK(b.coeff_degree(3) == 6);
    for (unsigned d = 2; d <= 5; ++d)
        for (unsigned n = 1; n <= 8; ++n) {
            Integer total(0);
            for (auto m : divisors(n)) total += formal_period_count(d, m);
            CHECK(total == ipow(Integer(d), n) + 1);
        }
}

TEST_CASE("univariate resultant conventions") {
    UniPoly p = UniPoly({Rational(-2), Rational(0), Rational(1)});  // T^2 - 2
    UniPoly q = UniPoly::linear(Rational(1), Rational(1));          // T + 1
    CHECK(resultant(q, p) == -1);   // p(-1)
    CHECK(resultant(p, q) == -1);   // prod (r + 1) over r = +-sqrt 2
    CHECK(resultant(p, q, 3) == resultant(p, q));
    UniPoly two = UniPoly({Rational(-2), Rational(2)});  // 2T - 2, root 1
    CHECK(resultant(two, UniPoly::constant(Rational(1)), 1) == 2);
}

TEST_CASE("resultants are multiplicative") {
    gen::Source src(21);
    for (int i = 0; i < 60; ++i) {
        UniPoly a = src.unipoly(4), b = src.unipoly(4), c = src.unipoly(4);
        if (a.degree() < 1 || b.is_zero() || c.is_zero()) continue;
        CHECK(resultant(a, b * c) == resultant(a, b) * resultant(a, c));
    }
}

TEST_CASE("interpolation reproduces the polynomial") {
    gen::Source src(22);
    for (int i = 0; i < 50; ++i) {
        UniPoly p = src.unipoly(7);
        std::vector<Rational> x, y;
        for (long k = 0; k <= 7; ++k) {
            x.emplace_back(k - 3);
            y.push_back(p.eval(x.back()));
        }
        CHECK(interpolate(x, y) == p);
    }
}

TEST_CASE("Bareiss determinant agrees with cofactor expansion") {
    Matrix<Integer> m(3, 3, Integer(0));
    long v[9] = {0, 2, 3, 4, 5, 6, 7, 8, 10};
    for (int i = 0; i < 9; ++i) m(i / 3, i % 3) = v[i];
    CHECK(det(m) == -(2 * (4 * 10 - 6 * 7)) + 3 * (4 * 8 - 5 * 7));
}
