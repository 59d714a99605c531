#include "doctest.h"
#include "gen.hpp"

#include "paradyn/multiplier.hpp"

using namespace paradyn;

namespace {

RatMapQ z_squared() { return RatMapQ::from_integers({1, 0, 0}, {0, 0, 1}); }

UniPoly poly(std::initializer_list<Rational> low_to_high) { return UniPoly(std::vector<Rational>(low_to_high)); }

Rational raw_D(const HomPair<Integer>& F, unsigned n) {
    return Rational(hom_discriminant(dynatomic(F, n))) /
           rpow(Rational(rho(F)), norm_exponents(F.degree(), n).get_si());
}

}  // namespace

TEST_CASE("multiplier polynomials of z^2") {
    const RatMapQ f = z_squared();
    CHECK(mult_poly(f, 1).str() == "T^3 - 2*T^2");
    CHECK(mult_poly(f, 2).str() == "T - 4");
    CHECK(mult_poly(f, 3).str() == "T^2 - 16*T + 64");
    CHECK(D_star(f, 1).value == -1);
    CHECK(D_star(f, 2).value == 3);
    CHECK(delta(f, 3, 1) == 7);
    CHECK(delta(f, 2, 1) == -3);
    CHECK(delta_diag(f, 3) == 7);
    for (unsigned n = 1; n <= 4; ++n) CHECK(verify_theorem(f, n).ok());
}

TEST_CASE("fixed-point multipliers of 3z^2/(z^2 + 2) by hand") {
    // Fixed points 0, 1, 2 with f' = 12z/(z^2 + 2)^2.
    const RatMapQ f = RatMapQ::from_integers({2, 0, 1}, {0, 0, 3});
    UniPoly expected = poly({0, 1}) * poly({Rational(-4, 3), 1}) * poly({Rational(-2, 3), 1});
    CHECK(mult_poly(f, 1) == expected);
}

TEST_CASE("the 2-cycle of z^2 - 1 is superattracting") {
    const RatMapQ f = RatMapQ::from_integers({1, 0, 0}, {-1, 0, 1});
    CHECK(mult_poly(f, 2) == poly({0, 1}));
}

TEST_CASE("parabolic fixed point makes the discriminant vanish") {
    const RatMapQ f = RatMapQ::from_integers({4, 0, 0}, {1, 0, 4});
    CHECK(f.rho() == 256);
    CHECK(D_star(f, 1).value == 0);
    CHECK(mult_poly(f, 1).eval(Rational(1)) == 0);
    CHECK(verify_theorem(f, 1).ok());
}

TEST_CASE("degenerate maps are rejected") {
    CHECK_THROWS_AS(RatMapQ::from_integers({1, 1, 0}, {1, 1, 0}), DegenerateMap);
    CHECK_THROWS_AS(RatMapQ::from_integers({1, 0}, {0, 1}), DegenerateMap);
}

TEST_CASE("norm and Sylvester routes agree") {
    gen::Source src(41);
    for (int i = 0; i < 6; ++i) {
        const RatMapQ f = src.map(2);
        for (unsigned n = 1; n <= 3; ++n)
            CHECK(multiplier_product(f, n, MultiplierRoute::Norm) == multiplier_product(f, n, MultiplierRoute::Sylvester));
    }
    const RatMapQ g = src.map(3);
    CHECK(multiplier_product(g, 2, MultiplierRoute::Norm) == multiplier_product(g, 2, MultiplierRoute::Sylvester));
}

TEST_CASE("multiplier product has the expected degree and leading sign") {
    gen::Source src(42);
    for (int i = 0; i < 8; ++i) {
        const RatMapQ f = src.map(2);
        for (unsigned n = 1; n <= 3; ++n) {
            const UniPoly M = multiplier_product(f, n);
            const long k = formal_period_count(2, n).get_si();
            CHECK(M.degree() == k);
            CHECK(M.lead() == (k % 2 ? -1 : 1));
            CHECK(multiplier_product_value(f, n, Rational(5, 3)) == M.eval(Rational(5, 3)));
        }
    }
}

TEST_CASE("nth roots of polynomials") {
    gen::Source src(43);
    for (int i = 0; i < 30; ++i) {
        UniPoly p = src.unipoly(4);
        if (p.degree() < 1) continue;
        p = (Rational(1) / p.lead()) * p;
        const unsigned n = static_cast<unsigned>(src.integer(1, 4));
        UniPoly M = UniPoly::constant(Rational(1));
        for (unsigned j = 0; j < n; ++j) M = M * p;
        if (M.degree() % 2) M = Rational(-1) * M;
        CHECK(nth_root_poly(M, n) == p);
    }
    CHECK_THROWS_AS(nth_root_poly(poly({-2, 0, 1}), 2), InvariantViolation);
}

TEST_CASE("the factorization identities hold on random maps") {
    gen::Source src(44);
    for (int i = 0; i < 10; ++i) {
        const RatMapQ f = src.map(2);
        for (unsigned n = 1; n <= 4; ++n) {
            const TheoremReport rep = verify_theorem(f, n);
            CHECK_MESSAGE(rep.ok(), rep.str());
        }
    }
    for (int i = 0; i < 3; ++i) {
        const RatMapQ f = src.map(3, 3);
        for (unsigned n = 1; n <= 2; ++n) CHECK(verify_theorem(f, n).ok());
    }
}

TEST_CASE("normalized values do not depend on the lift or the coordinate") {
    gen::Source src(45);
    for (int i = 0; i < 8; ++i) {
        const RatMapQ f = src.map(2);
        const SL2 A = src.sl2();
        REQUIRE(A.det() == 1);
        const RatMapQ g = conjugate(f, A);
        const long c = src.integer(2, 7) * (src.coin() ? 1 : -1);
        HomPair<Integer> cF(Integer(c) * f.lift().F0, Integer(c) * f.lift().F1);
        for (unsigned n = 1; n <= 3; ++n) {
            const Rational D = D_star(f, n).value;
            CHECK(D_star(g, n).value == D);
            CHECK(raw_D(cF, n) == D);
            for (unsigned ell = 1; ell < n; ++ell) CHECK(R_star(g, n, ell).value == R_star(f, n, ell).value);
        }
        CHECK(mult_poly(g, 2) == mult_poly(f, 2));
    }
}

TEST_CASE("SL2 helpers") {
    const SL2 A = SL2::shear(3) * SL2::rotation();
    CHECK(A.det() == 1);
    CHECK((A * A.inverse()).is_identity());
    const RatMapQ f = z_squared();
    CHECK(conjugate(conjugate(f, A), A.inverse()).lift() == f.lift());
}

TEST_CASE("normalization moves periodic points off infinity") {
    const RatMapQ f = z_squared();  // infinity is fixed
    const Normalized nf = normalize_infinity(f, 1);
    CHECK_FALSE(nf.conjugation.is_identity());
    CHECK(sgn(nf.map.lift().F0.coeff(0)) != 0);
}

TEST_CASE("minimal rho clearing") {
    CHECK(minimal_rho_clearing(Rational(5, 8), Integer(2), 10) == 3u);
    CHECK(minimal_rho_clearing(Rational(5), Integer(2), 10) == 0u);
    CHECK_FALSE(minimal_rho_clearing(Rational(1, 3), Integer(2), 10).has_value());
}
