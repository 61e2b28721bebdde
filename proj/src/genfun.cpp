#include "tuttekit/genfun.hpp"

#include "tuttekit/errors.hpp"

namespace tuttekit {

namespace {

const std::vector<std::string> &xy() { return coboundary_vars(); }

MultiPoly c(long v) { return MultiPoly::constant(xy(), Rational(v)); }
MultiPoly X() { return MultiPoly::variable(xy(), "X"); }
MultiPoly Y() { return MultiPoly::variable(xy(), "Y"); }

TruncSeries F(const MultiPoly &alpha, const MultiPoly &beta, unsigned order) {
    return deformed_exponential(alpha, beta, order);
}

} // namespace

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t result = n;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) {
                n /= p;
            }
            result -= result / p;
        }
    }
    if (n > 1) {
        result -= result / n;
    }
    return result;
}

TruncSeries typeA_weight_series(unsigned order) {
    if (order < 1) {
        throw PreconditionError("generating function order must be at least 1");
    }
    const TruncSeries cg = series_log(F(c(1), Y(), order));
    TruncSeries total = TruncSeries::one(xy(), order);
    const TruncSeries one = TruncSeries::one(xy(), order);
    for (unsigned k = 1; k <= order; ++k) {
        const TruncSeries term = series_exp(series_filter_every_nth(cg, k) * X()) - one;
        total = total + term * Rational(static_cast<long>(euler_phi(k)));
    }
    return total;
}

TruncSeries expand_genfun(const GenFunRequest &req) {
    const unsigned N = req.order;
    if (N < 1) {
        throw PreconditionError("generating function order must be at least 1");
    }
    const MultiPoly Y2 = Y() * Y();
    auto F2 = [&] { return F(c(2), Y(), N); };
    auto FZ_Y2 = [&] { return F(c(1), Y2, N); };
    auto FYZ_Y2 = [&] { return F(Y(), Y2, N); };
    const MultiPoly half_X_minus_1 = X() * Rational(1, 2) - c(1);
    const MultiPoly quarter_X = X() * Rational(1, 4);
    const MultiPoly quarter_X_minus_1 = quarter_X - c(1);

    if (req.lattice == LatticeKind::Classical) {
        const MultiPoly e = (X() - c(1)) * Rational(1, 2);
        switch (req.family) {
        case Family::A:
            return series_pow(F(c(1), Y(), N), X());
        case Family::B:
        case Family::C:
            return series_pow(F2(), e) * FYZ_Y2();
        case Family::D:
            return series_pow(F2(), e) * FZ_Y2();
        }
    }

    if (req.family == Family::A) {
        if (req.lattice == LatticeKind::Weight) {
            return typeA_weight_series(N);
        }
        return series_pow(F(c(1), Y(), N), X());
    }

    const TruncSeries base = series_pow(F2(), half_X_minus_1);
    switch (req.lattice) {
    case LatticeKind::Integer:
        switch (req.family) {
        case Family::B:
            return base * FZ_Y2() * FYZ_Y2();
        case Family::C:
            return base * FYZ_Y2() * FYZ_Y2();
        case Family::D:
            return base * FZ_Y2() * FZ_Y2();
        default:
            break;
        }
        break;
    case LatticeKind::Root:
        switch (req.family) {
        case Family::B:
            return base * FZ_Y2() * FYZ_Y2();
        case Family::C:
            return base * (F2() + FYZ_Y2() * FYZ_Y2()) * Rational(1, 2);
        case Family::D:
            return base * (F2() + FZ_Y2() * FZ_Y2()) * Rational(1, 2);
        default:
            break;
        }
        break;
    case LatticeKind::Weight: {
        if (req.family == Family::C) {
            return base * FYZ_Y2() * FYZ_Y2();
        }
        const TruncSeries bracket =
            series_pow(F2(), quarter_X) + series_pow(F(c(-2), Y(), N), quarter_X);
        const TruncSeries head = series_pow(F2(), quarter_X_minus_1);
        if (req.family == Family::B) {
            return head * FZ_Y2() * FYZ_Y2() * bracket;
        }
        return head * FZ_Y2() * FZ_Y2() * bracket;
    }
    default:
        break;
    }
    throw UnsupportedError("no generating function for this family and lattice");
}

TuttePolynomial extract_polynomial(const GenFunRequest &req, const TruncSeries &series, unsigned n) {
    if (n > series.order()) {
        throw PreconditionError("n = " + std::to_string(n) + " exceeds the series order " +
                                std::to_string(series.order()));
    }
    const RootSystemSpec spec{req.family, n, req.lattice};
    spec.validate();
    const unsigned r = spec.config_rank();
    MultiPoly coeff = series[n] * factorial(n);
    if (!coeff.has_integer_coefficients()) {
        throw DivisionError("generating function coefficient of Z^" + std::to_string(n) +
                            " times n! is not integral: " + coeff.to_string());
    }
    if (n > r) {
        coeff = divide_exact(coeff, X().pow(n - r));
    }
    const CoboundaryPolynomial psi{coeff, r};
    const Flavor flavor = req.lattice == LatticeKind::Classical ? Flavor::Classical : Flavor::Arithmetic;
    TuttePolynomial t =
        tutte_from_coboundary(psi, static_cast<unsigned>(build_lattice(spec).rank()), flavor);
    if (!t.poly.has_integer_coefficients()) {
        throw DivisionError("extracted Tutte polynomial has non-integer coefficients");
    }
    return t;
}

TuttePolynomial extract_polynomial(const GenFunRequest &req, unsigned n) {
    GenFunRequest r = req;
    if (r.order < n) {
        r.order = n;
    }
    return extract_polynomial(r, expand_genfun(r), n);
}

} // namespace tuttekit
