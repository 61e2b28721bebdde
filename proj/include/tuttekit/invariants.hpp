#pragma once

#include <vector>

#include "tuttekit/root_systems.hpp"
#include "tuttekit/tutte.hpp"

namespace tuttekit {

/// Evaluation-based invariants of an arithmetic Tutte polynomial.
struct InvariantReport {
    MultiPoly characteristic{std::vector<std::string>{"q"}}; // (-1)^r q^{n-r} M(1-q, 0)
    MultiPoly ehrhart{std::vector<std::string>{"t"}};        // t^r M(1+1/t, 1)
    MultiPoly poincare{std::vector<std::string>{"q"}};       // q^n M((2q+1)/q, 0)
    BigInt volume;          // M(1,1)
    BigInt lattice_points;  // E(1)
    BigInt interior_points; // (-1)^r E(-1)
    BigInt toric_regions;   // |M(1,0)|
    BigInt dm_dim;          // M(1,1)
    BigInt dpv_dim;         // M(2,1)
    unsigned rank = 0;
    unsigned lattice_rank = 0;
};

InvariantReport derive_all(const TuttePolynomial &m);

MultiPoly characteristic_polynomial(const TuttePolynomial &m);
MultiPoly ehrhart_polynomial(const TuttePolynomial &m);
MultiPoly poincare_polynomial(const TuttePolynomial &m);

/// Closed forms: integer lattice for every family; weight lattice for type A
/// (divisor sum). Type A takes n = number of coordinates.
MultiPoly closed_form_characteristic(Family family, unsigned n, LatticeKind lattice);

/// (q-1)(q-2)...(q-n+1) + (n-1)(n-1)!, valid for prime n >= 3.
MultiPoly typeA_weight_characteristic_prime_case(unsigned n);

/// Burnside count of necklaces with n black and q-n white beads up to
/// rotation: (1/q) sum_{m | gcd(n,q)} phi(m) C(q/m, n/m).
BigInt necklace_count(unsigned n, unsigned q);

inline constexpr unsigned kMaxPermutationDegree = 9;

/// c_k = sum over permutations of [n] with k cycles of the gcd of their
/// cycle lengths; entry k-1 holds c_k.
std::vector<BigInt> char_coeffs_via_permutations(unsigned n);

/// sum_k (-1)^{n-k} c_k q^{k-1}.
MultiPoly characteristic_from_coeffs(const std::vector<BigInt> &c);

/// |chi(0)| equals the Weyl group order.
bool weyl_group_check(Family family, unsigned n, const MultiPoly &chi);

} // namespace tuttekit
