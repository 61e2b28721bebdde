#include "tuttekit/invariants.hpp"

#include <algorithm>
#include <numeric>

#include "tuttekit/errors.hpp"
#include "tuttekit/genfun.hpp"

namespace tuttekit {

namespace {

const std::vector<std::string> &qv() {
    static const std::vector<std::string> v{"q"};
    return v;
}
const std::vector<std::string> &tv() {
    static const std::vector<std::string> v{"t"};
    return v;
}

MultiPoly cq(const Rational &c) { return MultiPoly::constant(qv(), c); }
MultiPoly q() { return MultiPoly::variable(qv(), "q"); }

void require_arithmetic(const TuttePolynomial &m) {
    if (m.flavor != Flavor::Arithmetic) {
        throw PreconditionError("derived invariants need an arithmetic Tutte polynomial");
    }
}

BigInt as_integer(const Rational &r, const char *what) {
    if (!r.is_integer()) {
        throw StructuralError(std::string(what) + " is not an integer");
    }
    return r.numerator();
}

Rational eval(const TuttePolynomial &m, long x, long y) {
    return m.poly.evaluate({{"x", Rational(x)}, {"y", Rational(y)}});
}

/// sum_{i,j} c_ij a^i b^j s^{k-i} over y = y0, with a, s polynomials in one
/// variable: the common shape of every cleared substitution here.
MultiPoly cleared(const TuttePolynomial &m, const MultiPoly &a, const MultiPoly &s, unsigned k,
                  long y0, const std::vector<std::string> &vars) {
    MultiPoly out(vars);
    for (const auto &[exps, c] : m.poly.terms()) {
        const unsigned i = exps[0], j = exps[1];
        if (i > k) {
            throw StructuralError("x-degree exceeds the clearing exponent: rank inconsistency");
        }
        out += a.pow(i) * s.pow(k - i) * (c * pow(Rational(y0), j));
    }
    return out;
}

} // namespace

MultiPoly characteristic_polynomial(const TuttePolynomial &m) {
    require_arithmetic(m);
    if (m.ambient_rank < m.rank) {
        throw StructuralError("lattice rank below configuration rank");
    }
    MultiPoly at(qv());
    for (const auto &[exps, c] : m.poly.terms()) {
        if (exps[1] == 0) {
            at += (cq(Rational(1)) - q()).pow(exps[0]) * c;
        }
    }
    const Rational sign(m.rank % 2 == 0 ? 1 : -1);
    return at * q().pow(m.ambient_rank - m.rank) * sign;
}

MultiPoly ehrhart_polynomial(const TuttePolynomial &m) {
    require_arithmetic(m);
    const MultiPoly t = MultiPoly::variable(tv(), "t");
    const MultiPoly one = MultiPoly::constant(tv(), Rational(1));
    // t^r (1 + 1/t)^i = (t+1)^i t^{r-i}
    return cleared(m, t + one, t, m.rank, 1, tv());
}

MultiPoly poincare_polynomial(const TuttePolynomial &m) {
    require_arithmetic(m);
    // q^n ((2q+1)/q)^i = (2q+1)^i q^{n-i}
    return cleared(m, q() * Rational(2) + cq(Rational(1)), q(), m.ambient_rank, 0, qv());
}

InvariantReport derive_all(const TuttePolynomial &m) {
    require_arithmetic(m);
    InvariantReport r;
    r.rank = m.rank;
    r.lattice_rank = m.ambient_rank;
    r.characteristic = characteristic_polynomial(m);
    r.ehrhart = ehrhart_polynomial(m);
    r.poincare = poincare_polynomial(m);
    r.volume = as_integer(eval(m, 1, 1), "M(1,1)");
    r.dm_dim = r.volume;
    r.dpv_dim = as_integer(eval(m, 2, 1), "M(2,1)");
    r.toric_regions = abs(as_integer(eval(m, 1, 0), "M(1,0)"));
    r.lattice_points = as_integer(r.ehrhart.evaluate({{"t", Rational(1)}}), "E(1)");
    const BigInt e_minus = as_integer(r.ehrhart.evaluate({{"t", Rational(-1)}}), "E(-1)");
    r.interior_points = m.rank % 2 == 0 ? e_minus : BigInt(-e_minus);
    return r;
}

MultiPoly closed_form_characteristic(Family family, unsigned n, LatticeKind lattice) {
    RootSystemSpec{family, n, lattice}.validate();
    auto linear = [](long c) { return q() - cq(Rational(c)); };
    MultiPoly out = cq(Rational(1));
    if (lattice == LatticeKind::Integer) {
        switch (family) {
        case Family::A:
            for (unsigned k = 0; k < n; ++k) {
                out *= linear(static_cast<long>(k));
            }
            return out;
        case Family::C:
            for (unsigned k = 1; k <= n; ++k) {
                out *= linear(2L * k);
            }
            return out;
        case Family::B:
            for (unsigned k = 1; k + 1 <= n; ++k) {
                out *= linear(2L * k);
            }
            return out * linear(static_cast<long>(n));
        case Family::D: {
            for (unsigned k = 1; k + 2 <= n; ++k) {
                out *= linear(2L * k);
            }
            const long nn = n;
            return out * (q() * q() - q() * Rational(2 * (nn - 1)) + cq(Rational(nn * (nn - 1))));
        }
        }
    }
    if (lattice == LatticeKind::Weight && family == Family::A) {
        MultiPoly sum(qv());
        for (unsigned m = 1; m <= n; ++m) {
            if (n % m != 0) {
                continue;
            }
            const unsigned k = n / m;
            MultiPoly binom = cq(Rational(1));
            for (unsigned i = 0; i < k; ++i) {
                binom *= q() * Rational(1, static_cast<long>(m)) - cq(Rational(static_cast<long>(i)));
            }
            binom *= Rational(BigInt(1), factorial(k));
            const long sign = (n - k) % 2 == 0 ? 1 : -1;
            sum += binom * Rational(sign * static_cast<long>(euler_phi(m)));
        }
        MultiPoly result = divide_exact(sum * Rational(factorial(n)), q());
        if (!result.has_integer_coefficients()) {
            throw DivisionError("divisor-sum characteristic polynomial is not integral");
        }
        return result;
    }
    throw UnsupportedError("no closed-form characteristic polynomial for " +
                           RootSystemSpec{family, n, lattice}.to_string());
}

MultiPoly typeA_weight_characteristic_prime_case(unsigned n) {
    if (n < 3) {
        throw PreconditionError("the prime-case formula needs n >= 3");
    }
    MultiPoly out = cq(Rational(1));
    for (unsigned k = 1; k < n; ++k) {
        out *= q() - cq(Rational(static_cast<long>(k)));
    }
    return out + cq(Rational(BigInt(BigInt(n - 1) * factorial(n - 1))));
}

BigInt necklace_count(unsigned n, unsigned q_beads) {
    if (n < 1 || n > q_beads) {
        throw PreconditionError("necklace count needs 1 <= n <= q");
    }
    BigInt total = 0;
    const unsigned g = std::gcd(n, q_beads);
    for (unsigned m = 1; m <= g; ++m) {
        if (g % m == 0) {
            total += BigInt(static_cast<unsigned long>(euler_phi(m))) * binomial(q_beads / m, n / m);
        }
    }
    if (total % q_beads != 0) {
        throw StructuralError("Burnside sum not divisible by the group order");
    }
    return total / q_beads;
}

std::vector<BigInt> char_coeffs_via_permutations(unsigned n) {
    if (n > kMaxPermutationDegree) {
        throw CapacityError("permutation sweep limited to n <= " +
                            std::to_string(kMaxPermutationDegree));
    }
    std::vector<BigInt> c(n, 0);
    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    std::vector<bool> seen(n);
    do {
        std::fill(seen.begin(), seen.end(), false);
        unsigned cycles = 0, g = 0;
        for (unsigned s = 0; s < n; ++s) {
            if (seen[s]) {
                continue;
            }
            unsigned len = 0;
            for (unsigned u = s; !seen[u]; u = perm[u]) {
                seen[u] = true;
                ++len;
            }
            ++cycles;
            g = std::gcd(g, len);
        }
        c[cycles - 1] += g;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return c;
}

MultiPoly characteristic_from_coeffs(const std::vector<BigInt> &c) {
    const unsigned n = static_cast<unsigned>(c.size());
    MultiPoly out(qv());
    for (unsigned k = 1; k <= n; ++k) {
        const long sign = (n - k) % 2 == 0 ? 1 : -1;
        out += q().pow(k - 1) * Rational(BigInt(c[k - 1] * sign));
    }
    if (n == 0) {
        out = cq(Rational(1));
    }
    return out;
}

bool weyl_group_check(Family family, unsigned n, const MultiPoly &chi) {
    const Rational at0 = chi.evaluate({{chi.vars().empty() ? "q" : chi.vars()[0], Rational(0)}});
    const Rational order(BigInt(std::to_string(weyl_group_order(family, n))));
    return at0 == order || at0 == -order;
}

} // namespace tuttekit
