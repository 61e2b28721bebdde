#include "tuttekit/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <utility>

#include "tuttekit/errors.hpp"

namespace tuttekit {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw CapacityError("int64 overflow in lattice arithmetic");
    }
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw CapacityError("int64 overflow in lattice arithmetic");
    }
    return r;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) {
        return 0;
    }
    return checked_mul(a / std::gcd(a, b), b);
}

namespace {

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw CapacityError("int64 overflow in lattice arithmetic");
    }
    return r;
}

std::int64_t narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) {
        throw CapacityError("int64 overflow in lattice arithmetic");
    }
    return static_cast<std::int64_t>(v);
}

void swap_rows(IntMatrix &a, std::size_t i, std::size_t j) {
    if (i == j) {
        return;
    }
    for (std::size_t c = 0; c < a.cols(); ++c) {
        std::swap(a(i, c), a(j, c));
    }
}

void swap_cols(IntMatrix &a, std::size_t i, std::size_t j) {
    if (i == j) {
        return;
    }
    for (std::size_t r = 0; r < a.rows(); ++r) {
        std::swap(a(r, i), a(r, j));
    }
}

// row_dst -= q * row_src
void row_axpy(IntMatrix &a, std::size_t dst, std::size_t src, std::int64_t q) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
        a(dst, c) = checked_sub(a(dst, c), checked_mul(q, a(src, c)));
    }
}

void col_axpy(IntMatrix &a, std::size_t dst, std::size_t src, std::int64_t q) {
    for (std::size_t r = 0; r < a.rows(); ++r) {
        a(r, dst) = checked_sub(a(r, dst), checked_mul(q, a(r, src)));
    }
}

// Gaussian elimination over Q on an augmented system; returns the solution
// of columns * c = v.
RatVector solve_columns(const std::vector<RatVector> &columns, std::size_t ambient,
                        const RatVector &v) {
    const std::size_t d = columns.size();
    if (v.size() != ambient) {
        throw StructuralError("vector length " + std::to_string(v.size()) +
                              " does not match ambient dimension " + std::to_string(ambient));
    }
    std::vector<RatVector> m(ambient, RatVector(d + 1));
    for (std::size_t r = 0; r < ambient; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            m[r][c] = columns[c][r];
        }
        m[r][d] = v[r];
    }
    std::vector<std::size_t> pivot_row(d);
    std::size_t row = 0;
    for (std::size_t c = 0; c < d; ++c) {
        std::size_t p = row;
        while (p < ambient && m[p][c].is_zero()) {
            ++p;
        }
        if (p == ambient) {
            throw StructuralError("lattice basis columns are linearly dependent");
        }
        std::swap(m[p], m[row]);
        const Rational inv = Rational(1) / m[row][c];
        for (std::size_t j = c; j <= d; ++j) {
            m[row][j] *= inv;
        }
        for (std::size_t r = 0; r < ambient; ++r) {
            if (r != row && !m[r][c].is_zero()) {
                const Rational f = m[r][c];
                for (std::size_t j = c; j <= d; ++j) {
                    m[r][j] -= f * m[row][j];
                }
            }
        }
        pivot_row[c] = row++;
    }
    for (std::size_t r = row; r < ambient; ++r) {
        if (!m[r][d].is_zero()) {
            throw SpanError("vector lies outside the span of the lattice basis");
        }
    }
    RatVector c(d);
    for (std::size_t j = 0; j < d; ++j) {
        c[j] = m[pivot_row[j]][d];
    }
    return c;
}

} // namespace

IntMatrix IntMatrix::from_columns(std::size_t rows, std::span<const IntVector> columns) {
    IntMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) {
            throw StructuralError("column length mismatch");
        }
        for (std::size_t r = 0; r < rows; ++r) {
            m(r, c) = columns[c][r];
        }
    }
    return m;
}

std::vector<std::int64_t> snf_invariant_factors(IntMatrix a) {
    std::vector<std::int64_t> factors;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        // Pivot on the entry of least absolute value.
        std::size_t pi = rows;
        std::size_t pj = cols;
        for (std::size_t i = t; i < rows; ++i) {
            for (std::size_t j = t; j < cols; ++j) {
                if (a(i, j) != 0 && (pi == rows || std::llabs(a(i, j)) < std::llabs(a(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
            }
        }
        if (pi == rows) {
            break;
        }
        swap_rows(a, t, pi);
        swap_cols(a, t, pj);
        for (;;) {
            bool changed = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a(i, t) != 0) {
                    row_axpy(a, i, t, a(i, t) / a(t, t));
                    if (a(i, t) != 0) {
                        swap_rows(a, i, t);
                        changed = true;
                    }
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a(t, j) != 0) {
                    col_axpy(a, j, t, a(t, j) / a(t, t));
                    if (a(t, j) != 0) {
                        swap_cols(a, j, t);
                        changed = true;
                    }
                }
            }
            if (changed) {
                continue;
            }
            // Pivot must divide the remaining block.
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i) {
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (a(i, j) % a(t, t) != 0) {
                        for (std::size_t c = 0; c < cols; ++c) {
                            a(t, c) = checked_add(a(t, c), a(i, c));
                        }
                        divides = false;
                        break;
                    }
                }
            }
            if (divides) {
                break;
            }
        }
        factors.push_back(std::llabs(a(t, t)));
    }
    return factors;
}

std::size_t rational_rank(IntMatrix a) {
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::size_t rank = 0;
    std::int64_t prev = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && a(p, c) == 0) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        swap_rows(a, p, rank);
        const std::int64_t piv = a(rank, c);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                const __int128 num = static_cast<__int128>(piv) * a(i, j) -
                                     static_cast<__int128>(a(i, c)) * a(rank, j);
                a(i, j) = narrow(num / prev);
            }
            a(i, c) = 0;
        }
        prev = piv;
        ++rank;
    }
    return rank;
}

std::int64_t determinant(IntMatrix a) {
    if (a.rows() != a.cols()) {
        throw StructuralError("determinant of a non-square matrix");
    }
    const std::size_t n = a.rows();
    if (n == 0) {
        return 1;
    }
    int sign = 1;
    std::int64_t prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) {
                ++p;
            }
            if (p == n) {
                return 0;
            }
            swap_rows(a, p, k);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                const __int128 num = static_cast<__int128>(a(k, k)) * a(i, j) -
                                     static_cast<__int128>(a(i, k)) * a(k, j);
                a(i, j) = narrow(num / prev);
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

LatticeBasis::LatticeBasis(std::size_t ambient_dim, std::vector<RatVector> columns)
    : ambient_dim_(ambient_dim), columns_(std::move(columns)) {
    for (const auto &c : columns_) {
        if (c.size() != ambient_dim_) {
            throw StructuralError("lattice basis column has wrong length");
        }
    }
    if (columns_.size() > ambient_dim_) {
        throw StructuralError("more basis vectors than the ambient dimension");
    }
    // Throws if dependent.
    (void)solve_columns(columns_, ambient_dim_, RatVector(ambient_dim_));
}

LatticeBasis LatticeBasis::standard(std::size_t dim) {
    std::vector<RatVector> cols(dim, RatVector(dim));
    for (std::size_t i = 0; i < dim; ++i) {
        cols[i][i] = Rational(1);
    }
    return LatticeBasis(dim, std::move(cols));
}

RatVector LatticeBasis::rational_coordinates(const RatVector &v) const {
    return solve_columns(columns_, ambient_dim_, v);
}

IntVector LatticeBasis::coordinates(const RatVector &v) const {
    const RatVector c = rational_coordinates(v);
    IntVector out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!c[i].is_integer()) {
            throw MembershipError("vector is not in the lattice (coordinate " + c[i].to_string() +
                                  ")");
        }
        out[i] = c[i].to_int64();
    }
    return out;
}

VectorConfig::VectorConfig(LatticeBasis lattice, std::vector<RatVector> vectors)
    : lattice_(std::move(lattice)), vectors_(std::move(vectors)) {
    coords_.reserve(vectors_.size());
    for (const auto &v : vectors_) {
        coords_.push_back(lattice_.coordinates(v));
    }
}

IntMatrix VectorConfig::coordinate_matrix(std::span<const std::size_t> subset) const {
    IntMatrix m(lattice_rank(), subset.size());
    for (std::size_t c = 0; c < subset.size(); ++c) {
        const auto &col = coords_.at(subset[c]);
        for (std::size_t r = 0; r < col.size(); ++r) {
            m(r, c) = col[r];
        }
    }
    return m;
}

unsigned VectorConfig::rank() const {
    std::vector<std::size_t> all(size());
    std::iota(all.begin(), all.end(), 0);
    return static_cast<unsigned>(rational_rank(coordinate_matrix(all)));
}

SubsetStats subset_stats(const VectorConfig &config, std::span<const std::size_t> subset) {
    for (const auto i : subset) {
        if (i >= config.size()) {
            throw PreconditionError("subset index " + std::to_string(i) + " out of range");
        }
    }
    const IntMatrix m = config.coordinate_matrix(subset);
    SubsetStats s;
    s.rank = static_cast<unsigned>(rational_rank(m));
    const auto factors = snf_invariant_factors(m);
    for (const auto f : factors) {
        s.multiplicity = checked_mul(s.multiplicity, f);
    }
    return s;
}

namespace {

void lcm_sweep(const VectorConfig &config, const EchelonLattice &state, std::size_t start,
               std::int64_t &acc) {
    for (std::size_t i = start; i < config.size(); ++i) {
        EchelonLattice next = state;
        next.insert(config.coordinates(i));
        acc = lcm64(acc, next.saturation_index());
        lcm_sweep(config, next, i + 1, acc);
    }
}

} // namespace

std::int64_t multiplicity_lcm(const VectorConfig &config, std::size_t max_vectors) {
    if (config.size() > max_vectors) {
        throw CapacityError("multiplicity_lcm: " + std::to_string(config.size()) +
                            " vectors exceed the sweep guard of " + std::to_string(max_vectors));
    }
    std::int64_t acc = 1;
    lcm_sweep(config, EchelonLattice(config.lattice_rank()), 0, acc);
    return acc;
}

void EchelonLattice::insert(const IntVector &v) {
    if (v.size() != dim_) {
        throw StructuralError("EchelonLattice: vector length mismatch");
    }
    IntVector w = v;
    auto lead = [&](const IntVector &x) {
        std::size_t i = 0;
        while (i < x.size() && x[i] == 0) {
            ++i;
        }
        return i;
    };
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const std::size_t lw = lead(w);
        if (lw == dim_) {
            return;
        }
        const std::size_t c = pivots_[k];
        if (lw > c) {
            continue;
        }
        if (lw < c) {
            rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(k), w);
            pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(k), lw);
            return;
        }
        // Unimodular 2x2 combination putting gcd on the pivot row.
        IntVector &r = rows_[k];
        const std::int64_t a = r[c];
        const std::int64_t b = w[c];
        std::int64_t s = 1, t = 0, g = a;
        {
            std::int64_t old_r = a, rr = b, old_s = 1, ss = 0, old_t = 0, tt = 1;
            while (rr != 0) {
                const std::int64_t q = old_r / rr;
                std::tie(old_r, rr) = std::make_pair(rr, old_r - q * rr);
                std::tie(old_s, ss) = std::make_pair(ss, old_s - q * ss);
                std::tie(old_t, tt) = std::make_pair(tt, old_t - q * tt);
            }
            g = old_r;
            s = old_s;
            t = old_t;
        }
        const std::int64_t ag = a / g;
        const std::int64_t bg = b / g;
        IntVector nr(dim_);
        IntVector nw(dim_);
        for (std::size_t j = 0; j < dim_; ++j) {
            nr[j] = checked_add(checked_mul(s, r[j]), checked_mul(t, w[j]));
            nw[j] = checked_sub(checked_mul(bg, r[j]), checked_mul(ag, w[j]));
        }
        if (nr[c] < 0) {
            for (auto &x : nr) {
                x = -x;
            }
        }
        r = std::move(nr);
        w = std::move(nw);
    }
    const std::size_t lw = lead(w);
    if (lw < dim_) {
        rows_.push_back(std::move(w));
        pivots_.push_back(lw);
    }
}

std::int64_t EchelonLattice::saturation_index() const {
    if (rows_.empty()) {
        return 1;
    }
    IntMatrix m(rows_.size(), dim_);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            m(i, j) = rows_[i][j];
        }
    }
    std::int64_t idx = 1;
    for (const auto f : snf_invariant_factors(std::move(m))) {
        idx = checked_mul(idx, f);
    }
    return idx;
}

} // namespace tuttekit
