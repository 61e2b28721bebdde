#include "tuttekit/rational.hpp"

#include <limits>

#include "tuttekit/errors.hpp"

namespace tuttekit {

Rational::Rational(long long v) {
    q_ = mpq_class(BigInt(std::to_string(v)));
}

Rational::Rational(const BigInt &num, const BigInt &den) {
    if (den == 0) {
        throw PreconditionError("rational with zero denominator");
    }
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(BigInt(s, 10));
        }
        return Rational(BigInt(s.substr(0, slash), 10), BigInt(s.substr(slash + 1), 10));
    } catch (const std::invalid_argument &) {
        throw PreconditionError("malformed rational '" + s + "'");
    }
}

std::int64_t Rational::to_int64() const {
    if (!is_integer()) {
        throw PreconditionError("rational " + to_string() + " is not an integer");
    }
    const BigInt &n = q_.get_num();
    if (!n.fits_slong_p()) {
        throw PreconditionError("integer " + to_string() + " exceeds 64 bits");
    }
    return n.get_si();
}

std::string Rational::to_string() const {
    if (is_integer()) {
        return q_.get_num().get_str();
    }
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational &Rational::operator/=(const Rational &o) {
    if (o.is_zero()) {
        throw PreconditionError("division by zero");
    }
    q_ /= o.q_;
    return *this;
}

Rational pow(const Rational &base, unsigned exponent) {
    BigInt num;
    BigInt den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), exponent);
    return Rational(num, den);
}

BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(unsigned n, unsigned k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace tuttekit
