#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "tuttekit/errors.hpp"
#include "tuttekit/root_systems.hpp"

using namespace tuttekit;

namespace {

RatVector rv(std::initializer_list<long> xs) {
    RatVector v;
    for (long x : xs) {
        v.emplace_back(x);
    }
    return v;
}

} // namespace

TEST_CASE("positive roots of rank-2 systems") {
    const auto c2 = build_config({Family::C, 2, LatticeKind::Integer});
    CHECK(c2.vectors() == std::vector<RatVector>{rv({1, -1}), rv({1, 1}), rv({2, 0}), rv({0, 2})});
    const auto b2 = build_config({Family::B, 2, LatticeKind::Integer});
    CHECK(b2.vectors() == std::vector<RatVector>{rv({1, -1}), rv({1, 1}), rv({1, 0}), rv({0, 1})});
    const auto d2 = build_config({Family::D, 2, LatticeKind::Integer});
    CHECK(d2.vectors() == std::vector<RatVector>{rv({1, -1}), rv({1, 1})});
    const auto a3 = build_config({Family::A, 3, LatticeKind::Integer});
    CHECK(a3.vectors() == std::vector<RatVector>{rv({1, -1, 0}), rv({1, 0, -1}), rv({0, 1, -1})});
    CHECK(a3.rank() == 2);
    CHECK(a3.lattice_rank() == 3);
}

TEST_CASE("root counts and ranks") {
    for (unsigned n = 2; n <= 5; ++n) {
        for (auto fam : {Family::A, Family::B, Family::C, Family::D}) {
            const RootSystemSpec s{fam, n, LatticeKind::Root};
            const auto cfg = build_config(s);
            CHECK(cfg.size() == s.root_count());
            CHECK(cfg.rank() == s.config_rank());
            std::set<RatVector> distinct(cfg.vectors().begin(), cfg.vectors().end());
            CHECK(distinct.size() == cfg.size());
        }
    }
    CHECK(RootSystemSpec{Family::B, 4, LatticeKind::Integer}.root_count() == 16);
    CHECK(RootSystemSpec{Family::D, 4, LatticeKind::Integer}.root_count() == 12);
    CHECK(RootSystemSpec{Family::A, 5, LatticeKind::Integer}.root_count() == 10);
}

TEST_CASE("every lattice contains its roots") {
    for (unsigned n = 2; n <= 5; ++n) {
        for (auto fam : {Family::A, Family::B, Family::C, Family::D}) {
            for (auto lat : {LatticeKind::Integer, LatticeKind::Root, LatticeKind::Weight,
                             LatticeKind::Classical}) {
                CHECK_NOTHROW(build_config({fam, n, lat}));
            }
        }
    }
}

TEST_CASE("weight over root index") {
    CHECK(cartan_index(Family::A, 4) == 4);
    CHECK(cartan_index(Family::B, 4) == 2);
    CHECK(cartan_index(Family::C, 4) == 2);
    CHECK(cartan_index(Family::D, 4) == 4);
    CHECK_THROWS_AS(cartan_index(Family::D, 2), PreconditionError);
    for (unsigned n = 2; n <= 6; ++n) {
        CHECK(lattice_index_check(Family::A, n) == cartan_index(Family::A, n));
        CHECK(lattice_index_check(Family::B, n) == cartan_index(Family::B, n));
        CHECK(lattice_index_check(Family::C, n) == cartan_index(Family::C, n));
        if (n >= 3) {
            CHECK(lattice_index_check(Family::D, n) == cartan_index(Family::D, n));
        }
    }
}

TEST_CASE("root lattice sits inside the weight lattice") {
    for (unsigned n = 2; n <= 5; ++n) {
        for (auto fam : {Family::A, Family::B, Family::C, Family::D}) {
            const auto W = build_lattice({fam, n, LatticeKind::Weight});
            const auto R = build_lattice({fam, n, LatticeKind::Root});
            for (const auto &c : R.columns()) {
                CHECK_NOTHROW((void)W.coordinates(c));
            }
        }
    }
}

TEST_CASE("spec strings") {
    const auto s = RootSystemSpec::parse("C:4:weight");
    CHECK(s == RootSystemSpec{Family::C, 4, LatticeKind::Weight});
    CHECK(s.to_string() == "C:4:weight");
    CHECK(RootSystemSpec::parse("A:3:root", true).n == 4);
    CHECK(RootSystemSpec::parse("A:3:root").n == 3);
    CHECK_THROWS_AS(RootSystemSpec::parse("E:6:root"), PreconditionError);
    CHECK_THROWS_AS(RootSystemSpec::parse("D:1:root"), PreconditionError);
    CHECK_THROWS_AS(RootSystemSpec::parse("C:x:root"), PreconditionError);
    CHECK_THROWS_AS(RootSystemSpec::parse("C:2"), PreconditionError);
    CHECK_THROWS_AS(RootSystemSpec::parse("C:2:lattice"), PreconditionError);
}

TEST_CASE("Weyl group orders") {
    CHECK(weyl_group_order(Family::A, 4) == 24);
    CHECK(weyl_group_order(Family::B, 3) == 48);
    CHECK(weyl_group_order(Family::C, 3) == 48);
    CHECK(weyl_group_order(Family::D, 4) == 192);
}
