#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tuttekit/lattice.hpp"
#include "tuttekit/multipoly.hpp"

namespace tuttekit {

enum class Flavor { Classical, Arithmetic };

inline const std::vector<std::string> &tutte_vars() {
    static const std::vector<std::string> v{"x", "y"};
    return v;
}
inline const std::vector<std::string> &coboundary_vars() {
    static const std::vector<std::string> v{"X", "Y"};
    return v;
}

/// M(x,y) (arithmetic) or T(x,y) (classical) of a configuration.
struct TuttePolynomial {
    MultiPoly poly{tutte_vars()};
    unsigned rank = 0;         // r(A)
    unsigned ambient_rank = 0; // rank of the lattice
    Flavor flavor = Flavor::Arithmetic;
};

/// psi(X,Y) = (y-1)^r M(x,y) under X = (x-1)(y-1), Y = y.
struct CoboundaryPolynomial {
    MultiPoly poly{coboundary_vars()};
    unsigned rank = 0;
};

/// Sum of m(B) over subsets grouped by (r(B), |B| - r(B)).
struct SubsetCensus {
    unsigned full_rank = 0;
    std::vector<std::vector<std::int64_t>> weight; // [rank][nullity]

    SubsetCensus(unsigned rank_bound, std::size_t size_bound);
    void add(const SubsetCensus &o);
    friend bool operator==(const SubsetCensus &, const SubsetCensus &) = default;
};

/// sum_{r,k} w[r][k] (x-1)^{R-r} (y-1)^k.
MultiPoly polynomial_from_census(const SubsetCensus &census);

inline constexpr std::size_t kDefaultTutteCapacity = 25;

/// Subset sweep over all 2^|A| subsets (OpenMP over subset prefixes, depth
/// first within each prefix with incremental echelon bases).
SubsetCensus subset_census(const VectorConfig &config, Flavor flavor,
                           std::size_t capacity = kDefaultTutteCapacity);

TuttePolynomial arithmetic_tutte_bruteforce(const VectorConfig &config,
                                            std::size_t capacity = kDefaultTutteCapacity);
TuttePolynomial classical_tutte_bruteforce(const VectorConfig &config,
                                           std::size_t capacity = kDefaultTutteCapacity);

namespace reference {

/// Serial sweep computing every subset's statistics from scratch (rank by
/// elimination, multiplicity by Smith normal form).
SubsetCensus subset_census(const VectorConfig &config, Flavor flavor,
                           std::size_t capacity = kDefaultTutteCapacity);
TuttePolynomial arithmetic_tutte_bruteforce(const VectorConfig &config,
                                            std::size_t capacity = kDefaultTutteCapacity);
TuttePolynomial classical_tutte_bruteforce(const VectorConfig &config,
                                           std::size_t capacity = kDefaultTutteCapacity);

} // namespace reference

/// Throws DivisionError when deg_x M exceeds the rank (rank mismatch).
CoboundaryPolynomial coboundary_from_tutte(const TuttePolynomial &t);

/// Inverse transform; throws DivisionError when (y-1)^r does not divide.
TuttePolynomial tutte_from_coboundary(const CoboundaryPolynomial &c, unsigned ambient_rank,
                                      Flavor flavor = Flavor::Arithmetic);

} // namespace tuttekit
