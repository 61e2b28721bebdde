#pragma once

#include "tuttekit/root_systems.hpp"
#include "tuttekit/series.hpp"
#include "tuttekit/tutte.hpp"

namespace tuttekit {

inline constexpr unsigned kDefaultGenfunOrder = 8;

struct GenFunRequest {
    Family family = Family::A;
    LatticeKind lattice = LatticeKind::Integer;
    unsigned order = kDefaultGenfunOrder;
};

/// Closed-form Tutte generating function (classical or arithmetic) over
/// {X, Y}, truncated after Z^order. The Z^n/n! coefficient is X^{d-r} psi,
/// where d is n for every family (type A: n coordinates).
TruncSeries expand_genfun(const GenFunRequest &req);

/// Psi^W_A = 1 + sum_k phi(k) (exp(X * CG_k) - 1), CG_k keeping every k-th
/// term of log F(Z,Y).
TruncSeries typeA_weight_series(unsigned order);

/// Reads psi off the Z^n coefficient of an expanded series. For type A, n is
/// the coordinate count.
TuttePolynomial extract_polynomial(const GenFunRequest &req, const TruncSeries &series, unsigned n);

/// expand_genfun followed by extract_polynomial, raising the order to n
/// when needed.
TuttePolynomial extract_polynomial(const GenFunRequest &req, unsigned n);

std::uint64_t euler_phi(std::uint64_t n);

} // namespace tuttekit
