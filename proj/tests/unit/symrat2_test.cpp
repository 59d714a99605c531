#include "doctest.h"
#include "../common/golden.hpp"

#include "paradyn/symrat2.hpp"

using namespace paradyn;

TEST_CASE("quadratic resultant and discriminants match the frozen values") {
    CHECK(rho2().str() == golden::read("rho2.txt"));
    CHECK(disc_phi1().str() == golden::read("disc_phi1.txt"));
    CHECK(disc_phi2().str() == golden::read("disc_phi2.txt"));
    CHECK(disc_phi1().term_count() == 22);
}

TEST_CASE("the period-two resultant factors through rho2") {
    const FactorCheck fc = res_phi2_phi1();
    CHECK(fc.resultant.str() == golden::read("res_phi2_phi1.txt"));
    CHECK(fc.matches);
}

TEST_CASE("symbolic identities for n = 1 and 2") {
    for (unsigned n : {1u, 2u}) {
        const SymbolicReport rep = theorem_symbolic(n);
        CHECK_MESSAGE(rep.ok(), rep.str());
    }
    CHECK_THROWS(theorem_symbolic(3));
}

TEST_CASE("specializing the symbolic values reproduces z^2") {
    // z^2 is (a, b, c, p, q, r) = (1, 0, 0, 0, 0, 1).
    const std::vector<Rational> pt{1, 0, 0, 0, 0, 1};
    CHECK(rho2().eval(pt) == 1);
    CHECK(disc_phi1().eval(pt) == -1);
    CHECK(disc_phi2().eval(pt) == 3);
}
