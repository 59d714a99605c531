#include "doctest.h"
#include "gen.hpp"

#include "paradyn/binform.hpp"

using namespace paradyn;

namespace {

BinForm<Integer> form(std::initializer_list<long> c) {
    std::vector<Integer> v;
    for (long x : c) v.emplace_back(x);
    return BinForm<Integer>(v);
}

HomPair<Integer> z_squared() { return HomPair<Integer>(form({1, 0, 0}), form({0, 0, 1})); }

}  // namespace

TEST_CASE("discriminant and resultant oracles") {
    CHECK(hom_discriminant(form({1, 1, 1})) == 3);          // X^2 + XY + Y^2
    CHECK(hom_discriminant(form({0, 1, -1, 0})) == -1);     // XY(X - Y)
    CHECK(hom_discriminant(form({1, 0, -1})) == -4);        // X^2 - Y^2
    CHECK(sylvester_resultant(form({1, 0, 0}), form({0, 0, 1})) == 1);
    CHECK(rho(HomPair<Integer>(form({4, 0, 0}), form({1, 0, 4}))) == 256);
}

TEST_CASE("dynatomic forms of z^2") {
    CHECK(fix_form(z_squared(), 1) == form({0, 1, -1, 0}));  // X^2 Y - X Y^2
    CHECK(dynatomic(z_squared(), 2) == form({1, 1, 1}));
    CHECK(dynatomic(z_squared(), 3).degree() == 6);
    CHECK(dynatomic(z_squared(), 4).degree() == 12);
}

TEST_CASE("dynatomic degrees follow the formal period counts") {
    gen::Source src(31);
    for (int i = 0; i < 10; ++i) {
        for (unsigned d : {2u, 3u}) {
            HomPair<Integer> F(src.form(d), src.form(d));
            if (sgn(rho(F)) == 0) continue;
            for (unsigned n = 1; n <= (d == 2 ? 4u : 2u); ++n)
                CHECK(Integer(dynatomic(F, n).degree()) == formal_period_count(d, n));
        }
    }
}

TEST_CASE("resultant of forms is multiplicative") {
    gen::Source src(32);
    for (int i = 0; i < 50; ++i) {
        auto P = src.form(static_cast<unsigned>(src.integer(1, 3)));
        auto Q = src.form(static_cast<unsigned>(src.integer(1, 3)));
        auto S = src.form(static_cast<unsigned>(src.integer(1, 3)));
        CHECK(sylvester_resultant(P, Q * S) == sylvester_resultant(P, Q) * sylvester_resultant(P, S));
    }
}

TEST_CASE("shears preserve the discriminant") {
    gen::Source src(33);
    for (int i = 0; i < 50; ++i) {
        auto P = src.form(static_cast<unsigned>(src.integer(2, 5)));
        const long t = src.integer(-5, 5);
        CHECK(hom_discriminant(shear(P, t)) == hom_discriminant(P));
    }
}

TEST_CASE("rho scales with the lift") {
    gen::Source src(34);
    for (int i = 0; i < 30; ++i) {
        const unsigned d = static_cast<unsigned>(src.integer(2, 4));
        HomPair<Integer> F(src.form(d), src.form(d));
        const Integer c(src.integer(-7, 7));
        HomPair<Integer> cF(c * F.F0, c * F.F1);
        CHECK(rho(cF) == ipow(c, 2 * d) * rho(F));
    }
}

TEST_CASE("iteration composes") {
    gen::Source src(35);
    HomPair<Integer> F(src.form(2), src.form(2));
    CHECK(iterate(F, 3) == compose(F, compose(F, F)));
    CHECK(iterate(F, 2).degree() == 4);
}
