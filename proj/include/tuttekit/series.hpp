#pragma once

#include <string>
#include <vector>

#include "tuttekit/multipoly.hpp"

namespace tuttekit {

/// Power series in a formal variable Z, truncated after Z^order, whose
/// coefficients are polynomials over a shared variable list (usually {X, Y}).
///
/// Truncation order is explicit; no operation ever raises it.
class TruncSeries {
  public:
    TruncSeries(std::vector<std::string> vars, unsigned order);
    TruncSeries(std::vector<std::string> vars, std::vector<MultiPoly> coeffs);

    static TruncSeries one(std::vector<std::string> vars, unsigned order);

    [[nodiscard]] unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
    [[nodiscard]] const std::vector<std::string> &vars() const { return vars_; }
    [[nodiscard]] const MultiPoly &operator[](unsigned k) const { return coeffs_.at(k); }
    [[nodiscard]] const std::vector<MultiPoly> &coeffs() const { return coeffs_; }
    void set(unsigned k, MultiPoly c);

    /// Same series truncated to a lower order.
    [[nodiscard]] TruncSeries truncate(unsigned order) const;

    friend bool operator==(const TruncSeries &a, const TruncSeries &b);

  private:
    std::vector<std::string> vars_;
    std::vector<MultiPoly> coeffs_;
};

TruncSeries operator+(const TruncSeries &a, const TruncSeries &b);
TruncSeries operator-(const TruncSeries &a, const TruncSeries &b);
TruncSeries operator*(const TruncSeries &a, const MultiPoly &c);
TruncSeries operator*(const TruncSeries &a, const Rational &c);

/// Cauchy product truncated at min(order_a, order_b).
TruncSeries series_mul(const TruncSeries &a, const TruncSeries &b);
inline TruncSeries operator*(const TruncSeries &a, const TruncSeries &b) { return series_mul(a, b); }

/// exp(s) for s with zero constant term, via (exp s)' = s' exp s.
TruncSeries series_exp(const TruncSeries &s);

/// log(s) for s with constant term 1.
TruncSeries series_log(const TruncSeries &s);

/// exp(e * log s) for s with constant term 1; e is a polynomial in the
/// coefficient variables.
TruncSeries series_pow(const TruncSeries &s, const MultiPoly &exponent);

/// Keeps the Z^k coefficients with n | k and zeroes the rest.
TruncSeries series_filter_every_nth(const TruncSeries &s, unsigned n);

/// Deformed exponential F(alpha*Z, beta) = sum_n alpha^n beta^C(n,2) Z^n / n!
/// with alpha and beta polynomials in the coefficient variables.
TruncSeries deformed_exponential(const MultiPoly &alpha, const MultiPoly &beta, unsigned order);

} // namespace tuttekit
