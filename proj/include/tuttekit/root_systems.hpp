#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "tuttekit/lattice.hpp"

namespace tuttekit {

enum class Family { A, B, C, D };

/// Lattice a configuration is measured against. Classical means "ignore
/// multiplicities" (ordinary Tutte polynomial); configurations are then built
/// in the integer lattice.
enum class LatticeKind { Integer, Root, Weight, Classical };

char family_char(Family f);
Family parse_family(std::string_view s);
std::string lattice_name(LatticeKind k);
LatticeKind parse_lattice(std::string_view s);

/// A classical root system together with a lattice.
///
/// For type A, `n` is the number of coordinates, so the configuration is
/// A_{n-1} of rank n-1. Types B, C, D use `n` as the rank.
struct RootSystemSpec {
    Family family = Family::A;
    unsigned n = 1;
    LatticeKind lattice = LatticeKind::Integer;

    /// Throws PreconditionError on an invalid combination.
    void validate() const;
    /// "family:n:lattice", e.g. "C:2:integer".
    [[nodiscard]] std::string to_string() const;
    /// Parses "family:n:lattice". With `type_a_rank` set, an A spec's n is
    /// read as the rank (A_k has k+1 coordinates).
    static RootSystemSpec parse(std::string_view text, bool type_a_rank = false);

    /// Rank of the positive-root configuration.
    [[nodiscard]] unsigned config_rank() const;
    /// Number of positive roots.
    [[nodiscard]] std::size_t root_count() const;

    friend bool operator==(const RootSystemSpec &, const RootSystemSpec &) = default;
};

/// Positive roots in a deterministic order: e_i - e_j for i < j
/// lexicographically, then e_i + e_j, then e_i (B) or 2e_i (C).
///
/// Type A in the integer lattice lives in Z^n. Type A in the root and weight
/// lattices lives in the quotient Z^n / (sum e_i = 0), written in the
/// coordinates e_1..e_{n-1} with e_n = -(e_1 + ... + e_{n-1}).
VectorConfig build_config(const RootSystemSpec &spec);

/// The lattice basis used by build_config.
LatticeBasis build_lattice(const RootSystemSpec &spec);

/// [weight lattice : root lattice] as the Cartan determinant.
std::int64_t cartan_index(Family family, unsigned n);

/// [weight lattice : root lattice] computed as |det| of the root lattice
/// basis written in weight lattice coordinates.
std::int64_t lattice_index_check(Family family, unsigned n);

/// A multiple of every m(B), derived from the signed-graph multiplicity
/// formulas; used to pick admissible primes without a full subset sweep.
std::int64_t known_multiplicity_divisor(const RootSystemSpec &spec);

/// Order of the Weyl group: n! (A with n coordinates), 2^n n! (B, C),
/// 2^{n-1} n! (D).
std::int64_t weyl_group_order(Family family, unsigned n);

} // namespace tuttekit
