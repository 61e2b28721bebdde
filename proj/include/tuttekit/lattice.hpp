#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tuttekit/rational.hpp"

namespace tuttekit {

using RatVector = std::vector<Rational>;
using IntVector = std::vector<std::int64_t>;

/// Dense row-major integer matrix. Entries are int64; arithmetic that would
/// overflow raises CapacityError.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    /// Matrix whose columns are the given vectors (all of length `rows`).
    static IntMatrix from_columns(std::size_t rows, std::span<const IntVector> columns);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    std::int64_t &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> data_;
};

/// Nonzero diagonal d1 | d2 | ... | dk of the Smith normal form.
std::vector<std::int64_t> snf_invariant_factors(IntMatrix m);

/// Rank over the rationals by fraction-free (Bareiss) elimination.
std::size_t rational_rank(IntMatrix m);

/// Determinant of a square matrix (Bareiss).
std::int64_t determinant(IntMatrix m);

/// Full-column-rank rational basis of a lattice in Q^m (columns are the
/// basis vectors).
class LatticeBasis {
  public:
    LatticeBasis(std::size_t ambient_dim, std::vector<RatVector> columns);
    static LatticeBasis standard(std::size_t dim);

    [[nodiscard]] std::size_t ambient_dim() const { return ambient_dim_; }
    [[nodiscard]] std::size_t rank() const { return columns_.size(); }
    [[nodiscard]] const std::vector<RatVector> &columns() const { return columns_; }

    /// The unique integer c with basis * c == v. Throws SpanError when v is
    /// outside the rational span, MembershipError when c is not integral.
    [[nodiscard]] IntVector coordinates(const RatVector &v) const;
    /// Rational coordinates (SpanError when outside the span).
    [[nodiscard]] RatVector rational_coordinates(const RatVector &v) const;

  private:
    std::size_t ambient_dim_;
    std::vector<RatVector> columns_;
};

inline IntVector lattice_coordinates(const LatticeBasis &lattice, const RatVector &v) {
    return lattice.coordinates(v);
}

struct SubsetStats {
    unsigned rank = 0;
    std::int64_t multiplicity = 1;
    friend bool operator==(const SubsetStats &, const SubsetStats &) = default;
};

/// Ordered vectors in a lattice. Lattice coordinates of every vector are
/// computed once at construction (which fails if a vector is not a lattice
/// member).
class VectorConfig {
  public:
    VectorConfig(LatticeBasis lattice, std::vector<RatVector> vectors);

    [[nodiscard]] std::size_t size() const { return vectors_.size(); }
    [[nodiscard]] std::size_t ambient_dim() const { return lattice_.ambient_dim(); }
    [[nodiscard]] std::size_t lattice_rank() const { return lattice_.rank(); }
    [[nodiscard]] const LatticeBasis &lattice() const { return lattice_; }
    [[nodiscard]] const std::vector<RatVector> &vectors() const { return vectors_; }
    [[nodiscard]] const IntVector &coordinates(std::size_t i) const { return coords_.at(i); }
    [[nodiscard]] const std::vector<IntVector> &all_coordinates() const { return coords_; }

    /// lattice_rank x |subset| matrix of lattice coordinates.
    [[nodiscard]] IntMatrix coordinate_matrix(std::span<const std::size_t> subset) const;
    /// Rank of the whole configuration.
    [[nodiscard]] unsigned rank() const;

  private:
    LatticeBasis lattice_;
    std::vector<RatVector> vectors_;
    std::vector<IntVector> coords_;
};

/// Rank and multiplicity (index of ZB in span(B) ∩ lattice) of a subset.
SubsetStats subset_stats(const VectorConfig &config, std::span<const std::size_t> subset);

/// lcm of m(B) over all subsets B. Throws CapacityError above `max_vectors`.
std::int64_t multiplicity_lcm(const VectorConfig &config, std::size_t max_vectors = 22);

/// Integer lattice generated incrementally by vectors of Z^d, kept as an
/// echelon basis. Used by sweeps that visit subsets depth-first.
class EchelonLattice {
  public:
    explicit EchelonLattice(std::size_t dim) : dim_(dim) {}

    void insert(const IntVector &v);
    [[nodiscard]] unsigned rank() const { return static_cast<unsigned>(rows_.size()); }
    /// Index of the lattice in its saturation.
    [[nodiscard]] std::int64_t saturation_index() const;

  private:
    std::size_t dim_;
    std::vector<IntVector> rows_; // sorted by pivot column
    std::vector<std::size_t> pivots_;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

} // namespace tuttekit
