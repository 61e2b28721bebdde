#pragma once

#include <cstdint>
#include <vector>

#include "tuttekit/lattice.hpp"
#include "tuttekit/root_systems.hpp"
#include "tuttekit/tutte.hpp"

namespace tuttekit {

/// Histogram of h(p) = number of hypertori through p, over the finite torus
/// Hom(L, F_p^*) identified with (F_p^*)^d through the lattice basis.
struct TorusProfile {
    std::uint64_t prime = 0;
    unsigned rank = 0;                    // d = lattice rank
    std::vector<std::uint64_t> histogram; // index h, size |A|+1
    /// sum_p Y^{h(p)} over the variable list {Y}.
    [[nodiscard]] MultiPoly as_poly() const;
    [[nodiscard]] BigInt total() const;
};

inline constexpr std::uint64_t kDefaultPrimeSearchCap = 1'000'000;
inline constexpr std::uint64_t kDefaultTorusCapacity = 1'000'000'000;

bool is_prime(std::uint64_t n);

/// Smallest prime p >= min_p with D | p-1.
std::uint64_t find_admissible_prime(std::uint64_t divisor, std::uint64_t min_p,
                                    std::uint64_t search_cap = kDefaultPrimeSearchCap);

/// A multiple of every m(B): the exact lcm when the configuration is small
/// enough for a subset sweep, otherwise the family's known divisor (checked
/// against the multiplicities of sampled subsets).
std::int64_t admissibility_divisor(const RootSystemSpec &spec, const VectorConfig &config);

/// Requires m(B) | p-1 for all B (`divisor` = 0 means compute the lcm).
TorusProfile torus_profile(const VectorConfig &config, std::uint64_t p, std::int64_t divisor = 0,
                           std::uint64_t capacity = kDefaultTorusCapacity);

namespace reference {
/// Literal field arithmetic: every point is a tuple of units, each vector is
/// tested by a product of modular powers (inverses for negative coordinates).
TorusProfile torus_profile(const VectorConfig &config, std::uint64_t p, std::int64_t divisor = 0,
                           std::uint64_t capacity = kDefaultTorusCapacity);
} // namespace reference

/// q^{d-r} psi(q, Y) as a polynomial in {Y}, with q = p - 1.
MultiPoly finite_field_prediction(const CoboundaryPolynomial &psi, unsigned lattice_rank,
                                  std::uint64_t p);

/// sum_p Y^{h(p)} == q^{d-r} psi(q, Y).
bool verify_finite_field_identity(const VectorConfig &config, std::uint64_t p,
                                  const CoboundaryPolynomial &psi, std::int64_t divisor = 0);

/// Classical form over F_s: requires m(B) | s-2 for all B; compares against
/// (s-1)^{d-r} psi_classical(s-1, Y).
bool verify_classical_mode(const VectorConfig &config, std::uint64_t s,
                           const CoboundaryPolynomial &classical_psi);

} // namespace tuttekit
