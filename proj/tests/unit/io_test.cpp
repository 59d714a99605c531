#include "doctest.h"
#include "gen.hpp"

#include "paradyn/corpus.hpp"
#include "paradyn/mapfile.hpp"

using namespace paradyn;

TEST_CASE("map files parse with comments, fractions and decimals") {
    const MapFile m = parse_map_file("# z^2/2 + 1/3\ndegree: 2\nF0: 1 0 0\nF1: 1/3 0 0.5\n");
    CHECK(m.degree == 2);
    const RatMapQ f = m.to_map();
    CHECK(f.lift().F0.coeffs() == std::vector<Integer>{6, 0, 0});
    CHECK(f.lift().F1.coeffs() == std::vector<Integer>{2, 0, 3});
}

TEST_CASE("map file errors") {
    CHECK_THROWS_AS(parse_map_file("degree: 2\nF0: 1 0\nF1: 0 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_map_file("F0: 1 0 0\nF1: 0 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_map_file("degree: 2\nF0: 1 x 0\nF1: 0 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_map_file("degree: 2\nF0: 1 1 0\nF1: 1 1 0\n").to_map(), DegenerateMap);
}

TEST_CASE("map files round trip") {
    gen::Source src(61);
    for (int i = 0; i < 50; ++i) {
        const RatMapQ f = src.map(static_cast<unsigned>(src.integer(2, 4)));
        CHECK(parse_map_file(map_file_of(f).str()).to_map().lift() == f.lift());
    }
}

TEST_CASE("corpus is reproducible and nondegenerate") {
    const auto a = random_corpus(2, 30, 7), b = random_corpus(2, 30, 7), c = random_corpus(2, 30, 8);
    REQUIRE(a.size() == 30);
    bool differs = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].lift() == b[i].lift());
        CHECK(sgn(a[i].rho()) != 0);
        differs = differs || !(a[i].lift() == c[i].lift());
    }
    CHECK(differs);
}
