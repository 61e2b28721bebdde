#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tuttekit/errors.hpp"
#include "tuttekit/series.hpp"

using namespace tuttekit;

namespace {

const std::vector<std::string> XY{"X", "Y"};
const std::vector<std::string> xy{"x", "y"};

MultiPoly P(const std::vector<std::string> &vars, const std::string &name) {
    return MultiPoly::variable(vars, name);
}
MultiPoly C(const std::vector<std::string> &vars, long c) { return MultiPoly::constant(vars, Rational(c)); }

MultiPoly random_poly(std::mt19937 &rng, const std::vector<std::string> &vars, int terms, unsigned deg) {
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<unsigned> e(0, deg);
    MultiPoly p(vars);
    for (int i = 0; i < terms; ++i) {
        Exponents ex(vars.size());
        for (auto &x : ex) {
            x = e(rng);
        }
        p += MultiPoly::monomial(vars, ex, Rational(coeff(rng)));
    }
    return p;
}

TruncSeries random_unit_series(std::mt19937 &rng, unsigned order) {
    std::vector<MultiPoly> c{C(XY, 1)};
    for (unsigned k = 1; k <= order; ++k) {
        c.push_back(random_poly(rng, XY, 3, 2) * Rational(1, static_cast<long>(k)));
    }
    return TruncSeries(XY, c);
}

} // namespace

TEST_CASE("rationals stay reduced") {
    const Rational r(BigInt(6), BigInt(-4));
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(Rational(0).denominator() == 1);
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK(Rational(5, 2).to_string() == "5/2");
    CHECK_THROWS(Rational::parse("1/0"));
}

TEST_CASE("polynomial arithmetic") {
    const MultiPoly x = P(xy, "x");
    CHECK((x + C(xy, 1)) * (x + C(xy, 3)) == x * x + x * Rational(4) + C(xy, 3));
    const MultiPoly p = x * x + P(xy, "y").pow(2) * Rational(2) + x * Rational(4) + P(xy, "y") * Rational(4) + C(xy, 3);
    CHECK(p + MultiPoly(xy) == p);
    CHECK((p - p).is_zero());
    CHECK(p.to_string() == "3 + 4*x + 4*y + x^2 + 2*y^2");
    CHECK_THROWS_AS(p + P(XY, "X"), StructuralError);
    CHECK_THROWS_AS((void)x.pow(2000), CapacityError);
}

TEST_CASE("substitution") {
    const MultiPoly X = P(XY, "X");
    const MultiPoly q = (P(xy, "x") - C(xy, 1)) * (P(xy, "y") - C(xy, 1));
    CHECK(substitute(X * X + X, {{"X", q}}, xy) == q * q + q);
    std::mt19937 rng(3);
    const MultiPoly p = random_poly(rng, xy, 6, 3);
    CHECK(substitute(p, {{"x", P(xy, "x")}, {"y", P(xy, "y")}}, xy) == p);
}

TEST_CASE("exact division") {
    const MultiPoly x = P(xy, "x"), y = P(xy, "y"), one = C(xy, 1);
    CHECK(divide_exact((y - one).pow(2) * (x + one), (y - one).pow(2)) == x + one);
    CHECK(divide_exact(y * y - one, y - one) == y + one);
    CHECK_THROWS_AS(divide_exact(x, y - one), DivisionError);

    std::mt19937 rng(11);
    for (int i = 0; i < 25; ++i) {
        const MultiPoly a = random_poly(rng, xy, 4, 3);
        MultiPoly b = random_poly(rng, xy, 3, 2);
        if (b.is_zero()) {
            continue;
        }
        CHECK(divide_exact(a * b, b) == a);
    }
}

TEST_CASE("series products") {
    const MultiPoly one = C(XY, 1);
    const TruncSeries a(XY, {one, one, MultiPoly(XY)});
    const TruncSeries b(XY, {one, -one, MultiPoly(XY)});
    const TruncSeries ab = a * b;
    CHECK(ab[0] == one);
    CHECK(ab[1].is_zero());
    CHECK(ab[2] == -one);
    CHECK(a * TruncSeries::one(XY, 2) == a);

    // F(Z,Y) = 1 + Z + Y Z^2/2 + ...; its square has Z^2 coefficient Y/2 + Y/2 + 1.
    const TruncSeries F = deformed_exponential(one, P(XY, "Y"), 2);
    CHECK((F * F)[2] == P(XY, "Y") + one);
    CHECK((a * TruncSeries::one(XY, 1)).order() == 1);
}

TEST_CASE("exp and log") {
    const MultiPoly one = C(XY, 1);
    CHECK(series_exp(TruncSeries(XY, 4)) == TruncSeries::one(XY, 4));
    const TruncSeries z(XY, {MultiPoly(XY), one, MultiPoly(XY), MultiPoly(XY)});
    const TruncSeries e = series_exp(z);
    CHECK(e[2] == one * Rational(1, 2));
    CHECK(e[3] == one * Rational(1, 6));
    CHECK(series_log(TruncSeries::one(XY, 3)) == TruncSeries(XY, 3));
    const TruncSeries l = series_log(TruncSeries(XY, {one, one, MultiPoly(XY), MultiPoly(XY)}));
    CHECK(l[1] == one);
    CHECK(l[2] == one * Rational(-1, 2));
    CHECK(l[3] == one * Rational(1, 3));
    // F(Z,0) = 1 + Z
    const TruncSeries f0 = deformed_exponential(one, MultiPoly(XY), 3);
    CHECK(series_log(f0) == l);
    CHECK_THROWS_AS(series_exp(TruncSeries::one(XY, 2)), PreconditionError);
    CHECK_THROWS_AS(series_log(TruncSeries(XY, 2)), PreconditionError);

    const TruncSeries F = deformed_exponential(one, P(XY, "Y"), 6);
    CHECK(series_exp(series_log(F)) == F);
}

TEST_CASE("powers with polynomial exponents") {
    const MultiPoly one = C(XY, 1), X = P(XY, "X");
    const TruncSeries onez(XY, {one, one, MultiPoly(XY), MultiPoly(XY), MultiPoly(XY)});
    const TruncSeries s = series_pow(onez, X);
    for (unsigned n = 0; n <= 4; ++n) {
        MultiPoly falling = one;
        for (unsigned i = 0; i < n; ++i) {
            falling *= X - C(XY, static_cast<long>(i));
        }
        CHECK(s[n] == falling * Rational(BigInt(1), factorial(n)));
    }
    CHECK(series_pow(onez, MultiPoly(XY)) == TruncSeries::one(XY, 4));

    // exp(X log F): the X-linear part of the Z^2 coefficient is the Z^2 term
    // of log F = Z + (Y-1) Z^2 / 2 + ...
    const TruncSeries FX = series_pow(deformed_exponential(one, P(XY, "Y"), 2), X);
    CHECK(FX[2].coefficient_of("X", 1) == (P(XY, "Y") - one) * Rational(1, 2));
}

TEST_CASE("deformed exponential shapes") {
    const MultiPoly one = C(XY, 1), Y = P(XY, "Y");
    const TruncSeries F = deformed_exponential(one, Y, 3);
    CHECK(F[0] == one);
    CHECK(F[1] == one);
    CHECK(F[2] == Y * Rational(1, 2));
    CHECK(F[3] == Y.pow(3) * Rational(1, 6));
    CHECK(deformed_exponential(one * Rational(2), Y, 3)[2] == Y * Rational(2));
    CHECK(deformed_exponential(Y, Y * Y, 3)[2] == Y.pow(4) * Rational(1, 2));
    CHECK(deformed_exponential(one * Rational(-2), Y, 3)[3] == Y.pow(3) * Rational(-8, 6));
    CHECK(deformed_exponential(one, Y * Y, 3)[3] == Y.pow(6) * Rational(1, 6));
}

TEST_CASE("every n-th term filter") {
    const MultiPoly one = C(XY, 1), zero(XY);
    const TruncSeries s(XY, {one, one, one, one});
    CHECK(series_filter_every_nth(s, 2) == TruncSeries(XY, {one, zero, one, zero}));
    CHECK(series_filter_every_nth(s, 1) == s);
    const TruncSeries l = series_log(TruncSeries(XY, {one, one, zero, zero, zero}));
    CHECK(series_filter_every_nth(l, 2) ==
          TruncSeries(XY, {zero, zero, one * Rational(-1, 2), zero, one * Rational(-1, 4)}));
    CHECK_THROWS_AS(series_filter_every_nth(s, 0), PreconditionError);
}

TEST_CASE("property: exp/log round trip and exponent additivity") {
    std::mt19937 rng(7);
    for (int i = 0; i < 10; ++i) {
        const TruncSeries s = random_unit_series(rng, 5);
        CHECK(series_exp(series_log(s)) == s);
        const MultiPoly e1 = random_poly(rng, XY, 2, 1);
        const MultiPoly e2 = random_poly(rng, XY, 2, 1);
        CHECK(series_pow(s, e1 + e2) == series_pow(s, e1) * series_pow(s, e2));
    }
}

TEST_CASE("F(Z,0) = 1 + Z at every order") {
    const MultiPoly one = C(XY, 1);
    for (unsigned N = 1; N <= 6; ++N) {
        const TruncSeries f = deformed_exponential(one, MultiPoly(XY), N);
        CHECK(f[0] == one);
        CHECK(f[1] == one);
        for (unsigned k = 2; k <= N; ++k) {
            CHECK(f[k].is_zero());
        }
    }
}
