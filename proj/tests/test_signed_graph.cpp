#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tuttekit/errors.hpp"
#include "tuttekit/fixtures.hpp"
#include "tuttekit/root_systems.hpp"
#include "tuttekit/signed_graph.hpp"
#include "tuttekit/tutte.hpp"

using namespace tuttekit;

namespace {

MultiPoly mv(const std::string &s) { return parse_polynomial(s, master_vars()); }
MultiPoly uv(const std::string &s) { return parse_polynomial(s, unsigned_vars()); }

Rational total(const MultiPoly &p) {
    Rational s;
    for (const auto &[e, c] : p.terms()) s += c;
    return s;
}

} // namespace

TEST_CASE("component statistics") {
    SignedGraph g{1, {}, {}, {}};
    CHECK(component_stats(g) == GraphStats{1, 0, 0, 0, 0, 1});
    g.loops = {0};
    CHECK(component_stats(g) == GraphStats{0, 0, 1, 1, 0, 1});
    SignedGraph h{2, {{0, 1}}, {{0, 1}}, {}};
    CHECK(component_stats(h) == GraphStats{0, 1, 0, 0, 2, 2});
    SignedGraph tri{3, {{0, 1}}, {{1, 2}, {0, 2}}, {}};
    CHECK(component_stats(tri) == GraphStats{1, 0, 0, 0, 3, 3});
    tri.pos_edges = {{0, 1}, {1, 2}};
    tri.neg_edges = {{0, 2}};
    CHECK(component_stats(tri) == GraphStats{0, 1, 0, 0, 3, 3});
    SignedGraph mixed{5, {{0, 1}}, {{2, 3}}, {4}};
    CHECK(component_stats(mixed) == GraphStats{2, 0, 1, 1, 2, 5});
    CHECK_THROWS_AS(component_stats(SignedGraph{2, {{0, 0}}, {}, {}}), PreconditionError);
}

TEST_CASE("balance agrees with the fundamental cycle basis") {
    std::mt19937 rng(17);
    for (unsigned v = 1; v <= 7; ++v) {
        const std::uint64_t pairs = v * (v - 1) / 2;
        std::uniform_int_distribution<std::uint64_t> code(0, (std::uint64_t{1} << (2 * pairs)) - 1);
        std::uniform_int_distribution<std::uint32_t> loops(0, (1u << v) - 1);
        for (int t = 0; t < 300; ++t) {
            const auto g = decode_signed_graph(v, code(rng), t % 3 == 0 ? loops(rng) : 0);
            const auto s = component_stats(g);
            CHECK((s.c_minus + s.c_zero == 0) == balanced_by_cycle_basis(g));
        }
    }
}

TEST_CASE("master census small cases") {
    const auto c = master_census(3);
    CHECK(c[1] == mv("t_plus + t_zero x"));
    CHECK(c[2].coefficient_of("x", 0) == mv("t_plus^2 + 2 t_plus y + t_minus y^2"));
    CHECK(total(c[3]) == Rational(512));
    CHECK(c == reference::master_census(3));
    CHECK_THROWS_AS(master_census(6), CapacityError);
}

TEST_CASE("master census equals the master series") {
    const auto c = master_census(4);
    const auto s = master_series(4);
    for (unsigned v = 0; v <= 4; ++v) {
        CHECK(c[v] == egf_coefficient(s, v));
    }
}

TEST_CASE("unsigned census") {
    const auto c = unsigned_census(6);
    CHECK(c[1] == uv("t"));
    CHECK(c[3].coeff({1, 2}) == Rational(3));
    CHECK(c[4].coeff({1, 3}) == Rational(16)); // Cayley: 4^2 spanning trees
    CHECK(c[5].coeff({1, 4}) == Rational(125));
    // Connected labelled graphs: 1, 1, 4, 38, 728, 26704.
    const std::vector<long> connected{1, 1, 4, 38, 728, 26704};
    const auto s = unsigned_series(6);
    for (unsigned v = 1; v <= 6; ++v) {
        CHECK(total(c[v].coefficient_of("t", 1)) == Rational(connected[v - 1]));
        CHECK(c[v] == egf_coefficient(s, v));
    }
    CHECK_THROWS_AS(unsigned_census(8), CapacityError);
}

TEST_CASE("marked graphs") {
    for (unsigned v = 1; v <= 4; ++v) {
        const auto r = marked_graph_check(v);
        CHECK(r.fibres_ok);
        CHECK(r.counts_ok);
        for (const auto &[key, b] : r.balanced) {
            CHECK(r.marked.at(key) == (std::uint64_t{1} << key.first) * b);
        }
    }
}

TEST_CASE("graph dictionary") {
    CHECK(graph_dictionary_tutte(Family::C, 2, LatticeKind::Integer).poly ==
          parse_polynomial("x^2+2y^2+4x+4y+3", tutte_vars()));
    CHECK(graph_dictionary_tutte(Family::A, 3, LatticeKind::Weight).poly ==
          parse_polynomial("4+x+x^2+3y", tutte_vars()));
    for (auto fam : {Family::A, Family::B, Family::C, Family::D}) {
        for (auto lat : {LatticeKind::Integer, LatticeKind::Root, LatticeKind::Weight}) {
            for (unsigned n = 2; n <= 3; ++n) {
                const auto bf = arithmetic_tutte_bruteforce(build_config({fam, n, lat}));
                const auto d = graph_dictionary_tutte(fam, n, lat);
                const auto id = RootSystemSpec{fam, n, lat}.to_string();
                CAPTURE(id);
                CHECK(d.poly == bf.poly);
                CHECK(d.rank == bf.rank);
                CHECK(reference::graph_dictionary_tutte(fam, n, lat).poly == bf.poly);
            }
        }
    }
}

TEST_CASE("multiplicity lemmas") {
    const GraphStats two_unbalanced{0, 2, 0, 0, 4, 4};
    CHECK(dictionary_multiplicity(Family::B, LatticeKind::Integer, two_unbalanced, false) == 4);
    const GraphStats looped{0, 1, 2, 2, 2, 4};
    CHECK(dictionary_multiplicity(Family::C, LatticeKind::Integer, looped, false) == 8);
    CHECK(dictionary_multiplicity(Family::A, LatticeKind::Integer, GraphStats{2, 0, 0, 0, 1, 3}, false) == 1);
}
