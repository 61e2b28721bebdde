#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "tuttekit/rational.hpp"

namespace tuttekit {

using Exponents = std::vector<unsigned>;

/// Sparse multivariate polynomial with exact rational coefficients over an
/// ordered list of named variables.
///
/// Monomials are packed into a 64-bit key (10 bits per variable, at most six
/// variables, the first variable in the most significant field), so the
/// internal term order is lexicographic. Canonical output order is graded
/// lexicographic: ascending total degree, and within a degree the
/// lexicographically larger exponent vector first (x^2, x*y, y^2).
class MultiPoly {
  public:
    static constexpr unsigned kMaxVars = 6;
    static constexpr unsigned kBitsPerVar = 10;
    static constexpr unsigned kMaxExponent = (1u << kBitsPerVar) - 1;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars);

    static MultiPoly constant(std::vector<std::string> vars, const Rational &c);
    static MultiPoly variable(std::vector<std::string> vars, const std::string &name);
    static MultiPoly monomial(std::vector<std::string> vars, const Exponents &exps,
                              const Rational &c);

    [[nodiscard]] const std::vector<std::string> &vars() const { return vars_; }
    [[nodiscard]] std::size_t num_vars() const { return vars_.size(); }
    [[nodiscard]] std::size_t num_terms() const { return terms_.size(); }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] bool is_constant() const;
    [[nodiscard]] Rational constant_term() const;
    [[nodiscard]] Rational coeff(const Exponents &exps) const;
    [[nodiscard]] std::size_t var_index(const std::string &name) const;

    /// Terms in canonical graded-lex order.
    [[nodiscard]] std::vector<std::pair<Exponents, Rational>> terms() const;

    [[nodiscard]] unsigned degree(std::size_t var) const;
    [[nodiscard]] unsigned degree(const std::string &var) const { return degree(var_index(var)); }
    [[nodiscard]] unsigned total_degree() const;
    [[nodiscard]] bool has_integer_coefficients() const;

    /// Same polynomial over another variable list. Every variable actually
    /// used must be present in `vars`.
    [[nodiscard]] MultiPoly with_vars(const std::vector<std::string> &vars) const;

    [[nodiscard]] Rational evaluate(const std::map<std::string, Rational> &point) const;

    /// Coefficient of var^k, as a polynomial over the same variables.
    [[nodiscard]] MultiPoly coefficient_of(const std::string &var, unsigned k) const;

    MultiPoly &operator+=(const MultiPoly &o);
    MultiPoly &operator-=(const MultiPoly &o);
    MultiPoly &operator*=(const MultiPoly &o);
    MultiPoly &operator*=(const Rational &c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly &b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly &b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly &a, const MultiPoly &b);
    friend MultiPoly operator*(MultiPoly a, const Rational &c) { return a *= c; }
    friend MultiPoly operator*(const Rational &c, MultiPoly a) { return a *= c; }
    friend MultiPoly operator-(const MultiPoly &a);

    friend bool operator==(const MultiPoly &a, const MultiPoly &b);

    [[nodiscard]] MultiPoly pow(unsigned e) const;

    /// Human-readable form, e.g. "3 + 4*x + 4*y + x^2 + 2*y^2".
    [[nodiscard]] std::string to_string() const;
    friend std::ostream &operator<<(std::ostream &os, const MultiPoly &p) {
        return os << p.to_string();
    }

    // Packed-key access for kernels that build polynomials in bulk.
    using Key = std::uint64_t;
    [[nodiscard]] Key pack(const Exponents &exps) const;
    [[nodiscard]] Exponents unpack(Key key) const;
    [[nodiscard]] const std::vector<std::pair<Key, Rational>> &raw_terms() const { return terms_; }
    /// Builds from unsorted (key, coeff) pairs, merging duplicates.
    static MultiPoly from_raw(std::vector<std::string> vars,
                              std::vector<std::pair<Key, Rational>> terms);

  private:
    void check_same_vars(const MultiPoly &o, const char *op) const;
    [[nodiscard]] unsigned field_shift(std::size_t var) const;
    [[nodiscard]] unsigned exponent_of(Key key, std::size_t var) const;

    std::vector<std::string> vars_;
    std::vector<std::pair<Key, Rational>> terms_; // sorted by key, no zeros
};

/// Replaces each bound variable of `p` by its polynomial; unbound variables
/// pass through and must exist in `result_vars`. Bindings are re-expressed
/// over `result_vars` before substitution.
MultiPoly substitute(const MultiPoly &p, const std::map<std::string, MultiPoly> &bindings,
                     const std::vector<std::string> &result_vars);

/// Quotient q with q*d == p; throws DivisionError when d does not divide p.
MultiPoly divide_exact(const MultiPoly &p, const MultiPoly &d);

} // namespace tuttekit
