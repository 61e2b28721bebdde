// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "tuttekit/errors.hpp"
#include "tuttekit/finite_field.hpp"
#include "tuttekit/fixtures.hpp"
#include "tuttekit/genfun.hpp"
#include "tuttekit/invariants.hpp"
#include "tuttekit/root_systems.hpp"
#include "tuttekit/series.hpp"
#include "tuttekit/signed_graph.hpp"
#include "tuttekit/tutte.hpp"

using namespace tuttekit;

namespace {

/// Collects the failures of one criterion.
class Check {
  public:
    void expect(bool ok, const std::string &what) {
        ++count_;
        if (!ok) {
            failures_.push_back(what);
        }
    }
    [[nodiscard]] bool ok() const { return failures_.empty(); }
    [[nodiscard]] std::size_t count() const { return count_; }
    [[nodiscard]] const std::vector<std::string> &failures() const { return failures_; }

  private:
    std::size_t count_ = 0;
    std::vector<std::string> failures_;
};

const auto kFamilies = {Family::A, Family::B, Family::C, Family::D};
const auto kLattices = {LatticeKind::Integer, LatticeKind::Root, LatticeKind::Weight};

/// Systems of rank 1..4 (type A by coordinates 2..5, D from rank 2).
std::vector<RootSystemSpec> rank_le4(const std::initializer_list<LatticeKind> &lattices) {
    std::vector<RootSystemSpec> out;
    for (auto fam : kFamilies) {
        for (auto lat : lattices) {
            for (unsigned r = 1; r <= 4; ++r) {
                if (fam == Family::D && r < 2) continue;
                out.push_back({fam, fam == Family::A ? r + 1 : r, lat});
            }
        }
    }
    return out;
}

TuttePolynomial from_fixture(const RootSystemSpec &s, const MultiPoly &poly) {
    TuttePolynomial t;
    t.poly = poly;
    t.rank = s.config_rank();
    t.ambient_rank = static_cast<unsigned>(build_lattice(s).rank());
    return t;
}

std::string row_name(const RootSystemSpec &s) { return std::string(1, family_char(s.family)) + std::to_string(s.n); }

// 1
void c2_example(Check &c) {
    const auto m = arithmetic_tutte_bruteforce(build_config({Family::C, 2, LatticeKind::Integer}));
    const auto mr = arithmetic_tutte_bruteforce(build_config({Family::C, 2, LatticeKind::Root}));
    c.expect(fixture_matches(printed_fixture("c2-example:tutte-integer"), m.poly), "M integer");
    c.expect(fixture_matches(printed_fixture("c2-example:tutte-root"), mr.poly), "M root");
    const auto a = derive_all(m);
    const auto b = derive_all(mr);
    c.expect(fixture_matches(printed_fixture("c2-example:ehrhart-integer"), a.ehrhart), "Ehrhart integer");
    c.expect(fixture_matches(printed_fixture("c2-example:ehrhart-root"), b.ehrhart), "Ehrhart root");
    c.expect(a.lattice_points == 21 && b.lattice_points == 12, "lattice points 21/12");
    c.expect(a.interior_points == 9 && b.interior_points == 4, "interior points 9/4");
}

// 2
void weight_table(Check &c) {
    for (auto fam : kFamilies) {
        const GenFunRequest req{fam, LatticeKind::Weight, kDefaultGenfunOrder};
        const auto series = expand_genfun(req);
        for (unsigned n = 2; n <= 5; ++n) {
            const RootSystemSpec s{fam, n, LatticeKind::Weight};
            const auto &f = printed_fixture("weight-tutte:" + row_name(s));
            c.expect(fixture_matches(f, extract_polynomial(req, series, n).poly), f.id);
        }
    }
}

// 3
void char_ehrhart_table(Check &c) {
    for (const auto &f : printed_fixtures()) {
        if (f.kind != FixtureKind::Tutte || f.id.rfind("weight-tutte:", 0) != 0) continue;
        const auto name = row_name(f.system);
        // The truncated row is completed by the generating function, whose
        // leading terms criterion 2 ties to the printed text.
        const auto t = f.partial ? extract_polynomial({f.system.family, LatticeKind::Weight}, f.system.n)
                                 : from_fixture(f.system, f.poly);
        const auto r = derive_all(t);
        c.expect(fixture_matches(printed_fixture("weight-char:" + name), r.characteristic), "char " + name);
        c.expect(fixture_matches(printed_fixture("weight-ehrhart:" + name), r.ehrhart), "ehrhart " + name);
        c.expect(weyl_group_check(f.system.family, f.system.n, r.characteristic), "Weyl " + name);
        if (name == "A4") {
            c.expect(r.ehrhart.coeff({3}) == Rational(64), "A4 Ehrhart leading coefficient 64");
        }
    }
}

// 4
void four_way(Check &c) {
    std::map<std::pair<Family, LatticeKind>, TruncSeries> series;
    for (const auto &s : rank_le4(kLattices)) {
        const auto key = std::pair{s.family, s.lattice};
        if (!series.count(key)) {
            series.emplace(key, expand_genfun({s.family, s.lattice, 5}));
        }
        const auto cfg = build_config(s);
        const auto bf = arithmetic_tutte_bruteforce(cfg);
        const auto gf = extract_polynomial({s.family, s.lattice, 5}, series.at(key), s.n);
        const auto gd = graph_dictionary_tutte(s.family, s.n, s.lattice);
        const auto id = s.to_string();
        c.expect(bf.poly == gf.poly, id + " bruteforce = genfun");
        c.expect(bf.poly == gd.poly, id + " bruteforce = graphs");
        const auto psi = coboundary_from_tutte(bf);
        const auto D = static_cast<std::uint64_t>(admissibility_divisor(s, cfg));
        const auto p1 = find_admissible_prime(D, 11);
        const auto p2 = find_admissible_prime(D, p1 + 1);
        for (auto p : {p1, p2}) {
            c.expect(verify_finite_field_identity(cfg, p, psi, static_cast<std::int64_t>(D)),
                     id + " finite field p=" + std::to_string(p));
        }
    }
}

// 5
void signed_graphs(Check &c) {
    const auto census = master_census(5);
    const auto ms = master_series(5);
    for (unsigned v = 0; v <= 4; ++v) {
        c.expect(census[v] == egf_coefficient(ms, v), "master v=" + std::to_string(v));
    }
    const auto want = egf_coefficient(ms, 5);
    const auto terms = want.terms();
    std::mt19937 rng(2024);
    std::uniform_int_distribution<std::size_t> pick(0, terms.size() - 1);
    for (int i = 0; i < 20; ++i) {
        const auto &[e, coeff] = terms[pick(rng)];
        c.expect(census[5].coeff(e) == coeff, "master v=5 sampled coefficient");
    }
    c.expect(census[5] == want, "master v=5 in full");
    const auto uc = unsigned_census(6);
    const auto us = unsigned_series(6);
    for (unsigned v = 0; v <= 6; ++v) {
        c.expect(uc[v] == egf_coefficient(us, v), "unsigned v=" + std::to_string(v));
    }
    for (unsigned v = 1; v <= 4; ++v) {
        const auto r = marked_graph_check(v);
        c.expect(r.fibres_ok && r.counts_ok, "marked graphs v=" + std::to_string(v));
    }
}

std::map<unsigned, MultiPoly> typeA_weight_chars(unsigned max_n) {
    const auto s = typeA_weight_series(max_n);
    std::map<unsigned, MultiPoly> out;
    for (unsigned n = 2; n <= max_n; ++n) {
        out.emplace(n, characteristic_polynomial(extract_polynomial({Family::A, LatticeKind::Weight, max_n}, s, n)));
    }
    return out;
}

// 6
void closed_forms(Check &c) {
    for (const auto &s : rank_le4({LatticeKind::Integer})) {
        const auto chi = characteristic_polynomial(arithmetic_tutte_bruteforce(build_config(s)));
        c.expect(closed_form_characteristic(s.family, s.n, LatticeKind::Integer) == chi, s.to_string());
    }
    for (const auto &[n, chi] : typeA_weight_chars(6)) {
        c.expect(closed_form_characteristic(Family::A, n, LatticeKind::Weight) == chi,
                 "divisor sum n=" + std::to_string(n));
    }
    for (unsigned n : {3u, 5u}) {
        c.expect(typeA_weight_characteristic_prime_case(n) ==
                     closed_form_characteristic(Family::A, n, LatticeKind::Weight),
                 "prime case n=" + std::to_string(n));
    }
}

// 7
void necklaces(Check &c) {
    const std::vector<std::string> qv{"q"};
    for (auto [n, q] : {std::pair{3u, 6u}, {3u, 9u}, {5u, 10u}, {7u, 14u}}) {
        const auto chi = closed_form_characteristic(Family::A, n, LatticeKind::Weight);
        const Rational value = chi.evaluate({{"q", Rational(static_cast<long>(q))}}) / Rational(factorial(n));
        const auto count = necklace_count(n, q);
        const std::string id = "(" + std::to_string(n) + "," + std::to_string(q) + ")";
        c.expect(value == Rational(count), id + " chi/n! = necklaces");
        // direct orbit enumeration of n-subsets of Z/q under rotation
        std::set<std::vector<unsigned>> seen;
        long orbits = 0;
        for (const auto &sub : oracle::combinations(q, n)) {
            std::vector<unsigned> w(sub.begin(), sub.end());
            if (seen.count(w)) continue;
            ++orbits;
            for (unsigned k = 0; k < q; ++k) {
                std::vector<unsigned> r;
                for (auto x : w) r.push_back((x + k) % q);
                std::sort(r.begin(), r.end());
                seen.insert(r);
            }
        }
        c.expect(count == orbits, id + " orbit enumeration");
    }
    const MultiPoly q = MultiPoly::variable(qv, "q"), one = MultiPoly::constant(qv, 1);
    c.expect((q - one) * (q - one * Rational(2)) + one * Rational(4) ==
                 closed_form_characteristic(Family::A, 3, LatticeKind::Weight),
             "(q-1)(q-2)+4 at n=3");
}

// 8
void gcd_permutations(Check &c) {
    const auto chars = typeA_weight_chars(6);
    for (unsigned n = 2; n <= 7; ++n) {
        const auto from_perms = characteristic_from_coeffs(char_coeffs_via_permutations(n));
        const auto target = n <= 6 ? chars.at(n) : closed_form_characteristic(Family::A, n, LatticeKind::Weight);
        c.expect(from_perms == target, "n=" + std::to_string(n));
    }
}

// 9
void properties(Check &c) {
    const auto &XY = coboundary_vars();
    const MultiPoly X = MultiPoly::variable(XY, "X");
    for (const auto &s : rank_le4({LatticeKind::Integer, LatticeKind::Root, LatticeKind::Weight,
                                    LatticeKind::Classical})) {
        const auto cfg = build_config(s);
        const bool classical = s.lattice == LatticeKind::Classical;
        const auto m = classical ? classical_tutte_bruteforce(cfg) : arithmetic_tutte_bruteforce(cfg);
        const auto psi = coboundary_from_tutte(m);
        c.expect(substitute(psi.poly, {{"Y", MultiPoly::constant(XY, 1)}}, XY) == X.pow(m.rank),
                 s.to_string() + " psi(X,1) = X^r");
        if (!classical && multiplicity_lcm(cfg) == 1) {
            c.expect(m.poly == classical_tutte_bruteforce(cfg).poly, s.to_string() + " classical = arithmetic");
        }
    }

    std::mt19937 rng(99);
    std::uniform_int_distribution<long> coeff(-4, 4);
    for (int t = 0; t < 20; ++t) {
        std::vector<MultiPoly> cs{MultiPoly::constant(XY, 1)};
        for (unsigned k = 1; k <= 6; ++k) {
            cs.push_back(MultiPoly::monomial(XY, {k % 2, k % 3}, Rational(coeff(rng), static_cast<long>(k))) +
                         MultiPoly::constant(XY, Rational(coeff(rng))));
        }
        const TruncSeries s(XY, cs);
        c.expect(series_exp(series_log(s)) == s, "exp(log s) = s");
    }

    std::uniform_int_distribution<std::int64_t> e(-5, 5);
    for (int t = 0; t < 50; ++t) {
        IntMatrix m(3, 3), u(3, 3);
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) m(i, j) = e(rng);
            u(i, i) = 1;
        }
        u(0, 1) = e(rng);
        u(0, 2) = e(rng);
        u(1, 2) = e(rng);
        IntMatrix um(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                for (std::size_t k = 0; k < 3; ++k) um(i, j) += u(i, k) * m(k, j);
        c.expect(snf_invariant_factors(um) == snf_invariant_factors(m), "SNF unimodular invariance");
    }

    for (const auto &s : rank_le4(kLattices)) {
        const auto cfg = build_config(s);
        if (cfg.lattice_rank() > 3) continue;
        const auto D = static_cast<std::uint64_t>(multiplicity_lcm(cfg));
        const auto p = find_admissible_prime(D, 7);
        BigInt expect = 1;
        for (std::size_t i = 0; i < cfg.lattice_rank(); ++i) expect *= BigInt(p - 1);
        c.expect(torus_profile(cfg, p).total() == expect, s.to_string() + " histogram total");
    }
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Check &)>>> criteria{
        {"C2 worked example: M, M^R, Ehrhart, lattice and interior points", c2_example},
        {"weight lattice Tutte table via generating functions (order 8)", weight_table},
        {"weight lattice characteristic/Ehrhart table and Weyl group values", char_ehrhart_table},
        {"bruteforce = genfun = graph dictionary = finite field (two primes), n <= 4", four_way},
        {"signed and unsigned graph enumeration theorems, marked graphs", signed_graphs},
        {"closed-form characteristic polynomials", closed_forms},
        {"necklace correspondence", necklaces},
        {"gcd-permutation coefficients, n <= 7", gcd_permutations},
        {"property suites", properties},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        const auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            criteria[i].second(c);
        } catch (const std::exception &ex) {
            error = ex.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool ok = c.ok() && error.empty();
        all = all && ok;
        std::ostringstream line;
        line << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ["
             << c.count() << " checks, " << std::fixed << std::setprecision(2) << secs << " s]";
        std::cout << line.str() << "\n";
        for (const auto &f : c.failures()) {
            std::cout << "    failed: " << f << "\n";
        }
        if (!error.empty()) {
            std::cout << "    error: " << error << "\n";
        }
    }
    std::cout << (all ? "all criteria passed" : "some criteria failed") << std::endl;
    return all ? 0 : 1;
}
