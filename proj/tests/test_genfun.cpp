#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tuttekit/errors.hpp"
#include "tuttekit/fixtures.hpp"
#include "tuttekit/genfun.hpp"
#include "tuttekit/root_systems.hpp"
#include "tuttekit/tutte.hpp"

using namespace tuttekit;

namespace {

MultiPoly xy(const std::string &s) { return parse_polynomial(s, tutte_vars()); }

const auto kFamilies = {Family::A, Family::B, Family::C, Family::D};
const auto kLattices = {LatticeKind::Integer, LatticeKind::Root, LatticeKind::Weight,
                        LatticeKind::Classical};

} // namespace

TEST_CASE("C2 from the integer-lattice series") {
    const GenFunRequest req{Family::C, LatticeKind::Integer, 4};
    const auto s = expand_genfun(req);
    const auto psi = s[2] * Rational(2);
    CHECK(substitute(psi, {{"Y", MultiPoly::constant(coboundary_vars(), 1)}}, coboundary_vars()) ==
          MultiPoly::variable(coboundary_vars(), "X").pow(2));
    CHECK(extract_polynomial(req, s, 2).poly == xy("x^2+2y^2+4x+4y+3"));
    CHECK(extract_polynomial({Family::C, LatticeKind::Root, 4}, 2).poly == xy("x^2+y^2+2x+2y+1"));
}

TEST_CASE("weight lattice rows") {
    CHECK(extract_polynomial({Family::A, LatticeKind::Weight, 4}, 2).poly == xy("1+x"));
    CHECK(extract_polynomial({Family::A, LatticeKind::Weight, 4}, 3).poly == xy("4+x+x^2+3y"));
    CHECK(extract_polynomial({Family::A, LatticeKind::Weight, 4}, 4).poly ==
          xy("15+5x+3x^2+x^3+20y+4xy+12y^2+4y^3"));
    CHECK(extract_polynomial({Family::B, LatticeKind::Weight, 4}, 3).poly ==
          xy("24+17x+6x^2+x^3+38y+10xy+33y^2+3xy^2+22y^3+12y^4+6y^5+2y^6"));
    CHECK(extract_polynomial({Family::D, LatticeKind::Weight, 4}, 2).poly == xy("1+2x+x^2"));
    CHECK(extract_polynomial({Family::A, LatticeKind::Integer, 4}, 2).poly == xy("x"));
}

TEST_CASE("series identities") {
    for (unsigned order : {3u, 6u}) {
        CHECK(expand_genfun({Family::B, LatticeKind::Classical, order}) ==
              expand_genfun({Family::C, LatticeKind::Classical, order}));
        CHECK(expand_genfun({Family::C, LatticeKind::Weight, order}) ==
              expand_genfun({Family::C, LatticeKind::Integer, order}));
        CHECK(expand_genfun({Family::A, LatticeKind::Root, order}) ==
              expand_genfun({Family::A, LatticeKind::Integer, order}));
        CHECK(typeA_weight_series(order) == expand_genfun({Family::A, LatticeKind::Weight, order}));
    }
}

TEST_CASE("extraction agrees with brute force") {
    for (auto fam : kFamilies) {
        for (auto lat : kLattices) {
            const GenFunRequest req{fam, lat, 5};
            const auto s = expand_genfun(req);
            for (unsigned n = (fam == Family::D ? 2 : 1); n <= 4; ++n) {
                if (fam == Family::A && n < 2) continue;
                const auto cfg = build_config({fam, n, lat});
                const auto bf = lat == LatticeKind::Classical ? classical_tutte_bruteforce(cfg)
                                                              : arithmetic_tutte_bruteforce(cfg);
                const auto g = extract_polynomial(req, s, n);
                const auto id = RootSystemSpec{fam, n, lat}.to_string();
                CAPTURE(id);
                CHECK(g.poly == bf.poly);
                CHECK(g.rank == bf.rank);
                CHECK(g.ambient_rank == bf.ambient_rank);
            }
        }
    }
}

TEST_CASE("type A weight volumes are n^(n-1)") {
    const auto s = typeA_weight_series(7);
    for (unsigned n = 2; n <= 7; ++n) {
        const auto m = extract_polynomial({Family::A, LatticeKind::Weight, 7}, s, n);
        long vol = 1;
        for (unsigned i = 1; i < n; ++i) vol *= n;
        CHECK(m.poly.evaluate({{"x", Rational(1)}, {"y", Rational(1)}}) == Rational(vol));
    }
}

TEST_CASE("extracted polynomials have non-negative integer coefficients") {
    for (auto fam : kFamilies) {
        for (auto lat : kLattices) {
            const GenFunRequest req{fam, lat, 6};
            const auto s = expand_genfun(req);
            for (unsigned n = 2; n <= 6; ++n) {
                for (const auto &[e, c] : extract_polynomial(req, s, n).poly.terms()) {
                    CHECK(c.is_integer());
                    CHECK(c.sign() > 0);
                }
            }
        }
    }
}

TEST_CASE("request errors") {
    CHECK_THROWS_AS(expand_genfun({Family::B, LatticeKind::Integer, 0}), PreconditionError);
    const GenFunRequest req{Family::B, LatticeKind::Integer, 3};
    CHECK_THROWS_AS(extract_polynomial(req, expand_genfun(req), 4), PreconditionError);
    CHECK(extract_polynomial(req, 4).rank == 4);
}

TEST_CASE("Euler phi") {
    const std::vector<std::uint64_t> expect{1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4};
    for (std::uint64_t n = 1; n <= expect.size(); ++n) {
        CHECK(euler_phi(n) == expect[n - 1]);
    }
}
