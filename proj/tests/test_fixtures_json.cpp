#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tuttekit/errors.hpp"
#include "tuttekit/fixtures.hpp"
#include "tuttekit/json_io.hpp"
#include "tuttekit/root_systems.hpp"
#include "tuttekit/tutte.hpp"

using namespace tuttekit;

TEST_CASE("printed polynomial syntax") {
    const auto &v = tutte_vars();
    const auto ref = MultiPoly::variable(v, "x").pow(2) + MultiPoly::variable(v, "y").pow(2) * Rational(2) +
                     MultiPoly::variable(v, "x") * Rational(4) + MultiPoly::variable(v, "y") * Rational(4) +
                     MultiPoly::constant(v, 3);
    CHECK(parse_polynomial("x^2+ 2y^2 + 4x + 4y + 3", v) == ref);
    CHECK(parse_polynomial("3+4 x+x^2+4 y+2 y^2", v) == ref);
    CHECK(parse_polynomial("3 + 4*x + 4*y + x^2 + 2*y^2", v) == ref);
    CHECK(parse_polynomial("y^{17}", v) == MultiPoly::variable(v, "y").pow(17));
    CHECK(parse_polynomial("1/2 x y", v) == MultiPoly::monomial(v, {1, 1}, Rational(1, 2)));
    CHECK(parse_polynomial("-x", v) == -MultiPoly::variable(v, "x"));
    CHECK_THROWS_AS(parse_polynomial("", v), PreconditionError);
    CHECK_THROWS_AS(parse_polynomial("x + z", v), PreconditionError);
    CHECK_THROWS_AS(parse_polynomial("x^{2", v), PreconditionError);
}

TEST_CASE("fixture set") {
    const auto &all = printed_fixtures();
    CHECK(all.size() >= 16 * 3);
    for (const auto &f : all) {
        CAPTURE(f.id);
        CHECK_FALSE(f.printed.empty());
        CHECK_FALSE(f.citation.empty());
        CHECK(fixture_matches(f, f.poly));
    }
    const auto &b5 = printed_fixture("weight-tutte:B5");
    CHECK(b5.partial);
    const auto &c2 = printed_fixture("c2-example:tutte-integer");
    CHECK(c2.poly == parse_polynomial("x^2+2y^2+4x+4y+3", tutte_vars()));
    CHECK_FALSE(fixture_matches(c2, parse_polynomial("x^2+2y^2+4x+4y+2", tutte_vars())));
    CHECK_THROWS_AS(printed_fixture("no-such-fixture"), PreconditionError);
}

TEST_CASE("partial fixtures check only the listed terms") {
    const auto &b5 = printed_fixture("weight-tutte:B5");
    auto extended = b5.poly + MultiPoly::monomial(tutte_vars(), {0, 20}, Rational(2));
    CHECK(fixture_matches(b5, extended));
    auto wrong = b5.poly + MultiPoly::monomial(tutte_vars(), {0, 1}, Rational(1));
    CHECK_FALSE(fixture_matches(b5, wrong));
}

TEST_CASE("polynomial JSON round trip") {
    const auto m = arithmetic_tutte_bruteforce(build_config({Family::B, 3, LatticeKind::Weight}));
    const Json j = poly_to_json(m.poly);
    CHECK(poly_from_json(j) == m.poly);
    CHECK(poly_from_json(Json::parse(j.dump())) == m.poly);
    CHECK(j.dump() == poly_to_json(poly_from_json(j)).dump());
    CHECK(j["terms"][0]["coeff"] == "24");

    const auto half = MultiPoly::constant(tutte_vars(), Rational(1, 2));
    CHECK_THROWS_AS(poly_to_json(half), StructuralError);
    CHECK(poly_from_json(poly_to_json(half, true)) == half);
    CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"vars":["x"],"terms":[{"coeff":"1","exps":[1,2]}]})")),
                    StructuralError);
    CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"vars":["x"]})")), StructuralError);
}

TEST_CASE("property: random polynomials round-trip through JSON") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<long> c(-1000, 1000);
    std::uniform_int_distribution<unsigned> e(0, 9);
    for (int t = 0; t < 50; ++t) {
        MultiPoly p(tutte_vars());
        for (int k = 0; k < 8; ++k) {
            p += MultiPoly::monomial(tutte_vars(), {e(rng), e(rng)}, Rational(c(rng)));
        }
        CHECK(poly_from_json(Json::parse(poly_to_json(p).dump())) == p);
    }
}

TEST_CASE("lattice JSON") {
    const auto j = lattice_to_json(build_lattice({Family::B, 2, LatticeKind::Weight}));
    CHECK(j.dump().find("1/2") != std::string::npos);
}
