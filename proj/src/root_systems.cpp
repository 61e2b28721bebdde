#include "tuttekit/root_systems.hpp"

#include <cctype>
#include <charconv>
#include <vector>

#include "tuttekit/errors.hpp"

namespace tuttekit {

char family_char(Family f) {
    switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    }
    return '?';
}

Family parse_family(std::string_view s) {
    if (s.size() == 1) {
        switch (std::toupper(static_cast<unsigned char>(s[0]))) {
        case 'A': return Family::A;
        case 'B': return Family::B;
        case 'C': return Family::C;
        case 'D': return Family::D;
        default: break;
        }
    }
    throw PreconditionError("unknown root system family '" + std::string(s) + "'");
}

std::string lattice_name(LatticeKind k) {
    switch (k) {
    case LatticeKind::Integer: return "integer";
    case LatticeKind::Root: return "root";
    case LatticeKind::Weight: return "weight";
    case LatticeKind::Classical: return "classical";
    }
    return "?";
}

LatticeKind parse_lattice(std::string_view s) {
    if (s == "integer" || s == "Z") return LatticeKind::Integer;
    if (s == "root" || s == "R") return LatticeKind::Root;
    if (s == "weight" || s == "W") return LatticeKind::Weight;
    if (s == "classical") return LatticeKind::Classical;
    throw PreconditionError("unknown lattice kind '" + std::string(s) + "'");
}

void RootSystemSpec::validate() const {
    if (n < 1) {
        throw PreconditionError("root system needs n >= 1");
    }
    if (family == Family::D && n < 2) {
        throw PreconditionError("type D requires n >= 2");
    }
}

std::string RootSystemSpec::to_string() const {
    return std::string(1, family_char(family)) + ":" + std::to_string(n) + ":" +
           lattice_name(lattice);
}

RootSystemSpec RootSystemSpec::parse(std::string_view text, bool type_a_rank) {
    const auto c1 = text.find(':');
    const auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
    if (c1 == std::string_view::npos || c2 == std::string_view::npos) {
        throw PreconditionError("system spec must look like family:n:lattice, got '" +
                                std::string(text) + "'");
    }
    RootSystemSpec spec;
    spec.family = parse_family(text.substr(0, c1));
    const auto num = text.substr(c1 + 1, c2 - c1 - 1);
    unsigned n = 0;
    const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), n);
    if (ec != std::errc() || ptr != num.data() + num.size()) {
        throw PreconditionError("bad n in system spec '" + std::string(text) + "'");
    }
    spec.n = (type_a_rank && spec.family == Family::A) ? n + 1 : n;
    spec.lattice = parse_lattice(text.substr(c2 + 1));
    spec.validate();
    return spec;
}

unsigned RootSystemSpec::config_rank() const {
    return family == Family::A ? n - 1 : n;
}

std::size_t RootSystemSpec::root_count() const {
    switch (family) {
    case Family::A: return n * (n - 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    }
    return 0;
}

namespace {

// Roots in standard coordinates of Q^n.
std::vector<RatVector> standard_roots(Family family, unsigned n) {
    std::vector<RatVector> roots;
    auto e = [n](unsigned i, long coeff) {
        RatVector v(n);
        v[i] = Rational(coeff);
        return v;
    };
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = i + 1; j < n; ++j) {
            RatVector v = e(i, 1);
            v[j] = Rational(-1);
            roots.push_back(std::move(v));
        }
    }
    if (family == Family::A) {
        return roots;
    }
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = i + 1; j < n; ++j) {
            RatVector v = e(i, 1);
            v[j] = Rational(1);
            roots.push_back(std::move(v));
        }
    }
    if (family == Family::B || family == Family::C) {
        for (unsigned i = 0; i < n; ++i) {
            roots.push_back(e(i, family == Family::B ? 1 : 2));
        }
    }
    return roots;
}

// Image of a vector of Q^n in the type-A quotient coordinates of Q^{n-1}.
RatVector to_quotient(const RatVector &v) {
    const std::size_t n = v.size();
    RatVector out(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        out[i] = v[i] - v[n - 1];
    }
    return out;
}

std::vector<RatVector> unit_columns(unsigned n) {
    std::vector<RatVector> cols(n, RatVector(n));
    for (unsigned i = 0; i < n; ++i) {
        cols[i][i] = Rational(1);
    }
    return cols;
}

// Basis of {a in Z^n : sum a even}: e_i - e_{i+1}, then e_{n-1} + e_n
// (2e_1 when n = 1).
std::vector<RatVector> even_sum_basis(unsigned n) {
    std::vector<RatVector> cols;
    if (n == 1) {
        cols.push_back(RatVector{Rational(2)});
        return cols;
    }
    for (unsigned i = 0; i + 1 < n; ++i) {
        RatVector v(n);
        v[i] = Rational(1);
        v[i + 1] = Rational(-1);
        cols.push_back(std::move(v));
    }
    RatVector v(n);
    v[n - 2] = Rational(1);
    v[n - 1] = Rational(1);
    cols.push_back(std::move(v));
    return cols;
}

// Basis of Z{e_1..e_n, (e_1+..+e_n)/2}: e_1..e_{n-1}, then the half-sum.
std::vector<RatVector> half_sum_basis(unsigned n) {
    std::vector<RatVector> cols;
    for (unsigned i = 0; i + 1 < n; ++i) {
        RatVector v(n);
        v[i] = Rational(1);
        cols.push_back(std::move(v));
    }
    cols.emplace_back(n, Rational(BigInt(1), BigInt(2)));
    return cols;
}

} // namespace

LatticeBasis build_lattice(const RootSystemSpec &spec) {
    spec.validate();
    const unsigned n = spec.n;
    const LatticeKind kind =
        spec.lattice == LatticeKind::Classical ? LatticeKind::Integer : spec.lattice;
    if (spec.family == Family::A) {
        if (kind == LatticeKind::Integer) {
            return LatticeBasis::standard(n);
        }
        if (kind == LatticeKind::Weight) {
            return LatticeBasis::standard(n - 1);
        }
        // Root lattice: images of the simple roots e_i - e_{i+1}.
        std::vector<RatVector> cols;
        for (unsigned i = 0; i + 1 < n; ++i) {
            RatVector v(n);
            v[i] = Rational(1);
            v[i + 1] = Rational(-1);
            cols.push_back(to_quotient(v));
        }
        return LatticeBasis(n - 1, std::move(cols));
    }
    switch (kind) {
    case LatticeKind::Integer:
        return LatticeBasis::standard(n);
    case LatticeKind::Root:
        if (spec.family == Family::B) {
            return LatticeBasis::standard(n);
        }
        return LatticeBasis(n, even_sum_basis(n));
    case LatticeKind::Weight:
        if (spec.family == Family::C) {
            return LatticeBasis::standard(n);
        }
        return LatticeBasis(n, half_sum_basis(n));
    case LatticeKind::Classical:
        break;
    }
    return LatticeBasis(n, unit_columns(n));
}

VectorConfig build_config(const RootSystemSpec &spec) {
    LatticeBasis lattice = build_lattice(spec);
    std::vector<RatVector> roots = standard_roots(spec.family, spec.n);
    if (spec.family == Family::A && spec.lattice != LatticeKind::Integer &&
        spec.lattice != LatticeKind::Classical) {
        for (auto &r : roots) {
            r = to_quotient(r);
        }
    }
    return VectorConfig(std::move(lattice), std::move(roots));
}

std::int64_t cartan_index(Family family, unsigned n) {
    switch (family) {
    case Family::A:
        if (n < 1) break;
        return n;
    case Family::B:
    case Family::C:
        if (n < 1) break;
        return 2;
    case Family::D:
        if (n < 3) {
            throw PreconditionError("the Cartan determinant formula for D_n needs n >= 3");
        }
        return 4;
    }
    throw PreconditionError("invalid rank for cartan_index");
}

std::int64_t lattice_index_check(Family family, unsigned n) {
    const LatticeBasis weight = build_lattice({family, n, LatticeKind::Weight});
    const LatticeBasis root = build_lattice({family, n, LatticeKind::Root});
    if (weight.rank() != root.rank()) {
        throw StructuralError("weight and root lattices have different ranks");
    }
    std::vector<IntVector> cols;
    for (const auto &c : root.columns()) {
        try {
            cols.push_back(weight.coordinates(c));
        } catch (const MembershipError &) {
            throw StructuralError("root lattice is not contained in the weight lattice");
        }
    }
    const auto det = determinant(IntMatrix::from_columns(weight.rank(), cols));
    return det < 0 ? -det : det;
}

std::int64_t known_multiplicity_divisor(const RootSystemSpec &spec) {
    const unsigned n = spec.n;
    const unsigned half = n / 2; // max number of loopless unbalanced components
    switch (spec.family) {
    case Family::A:
        return spec.lattice == LatticeKind::Weight ? n : 1;
    case Family::B:
        return std::int64_t{1} << (half + (spec.lattice == LatticeKind::Weight ? 1 : 0));
    case Family::C:
        return std::int64_t{1} << (spec.lattice == LatticeKind::Root ? n - 1 : n);
    case Family::D:
        switch (spec.lattice) {
        case LatticeKind::Weight: return std::int64_t{1} << (half + 1);
        case LatticeKind::Root: return std::int64_t{1} << (half > 0 ? half - 1 : 0);
        default: return std::int64_t{1} << half;
        }
    }
    return 1;
}

std::int64_t weyl_group_order(Family family, unsigned n) {
    std::int64_t f = 1;
    for (unsigned k = 2; k <= n; ++k) {
        f *= k;
    }
    switch (family) {
    case Family::A: return f;
    case Family::B:
    case Family::C: return (std::int64_t{1} << n) * f;
    case Family::D: return (std::int64_t{1} << (n - 1)) * f;
    }
    return f;
}

} // namespace tuttekit
