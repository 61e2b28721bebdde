#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "tuttekit/root_systems.hpp"
#include "tuttekit/series.hpp"
#include "tuttekit/tutte.hpp"

namespace tuttekit {

/// Vertices 0..v-1. A pair may carry a positive and a negative edge at once;
/// loops are unsigned, at most one per vertex.
struct SignedGraph {
    unsigned v = 0;
    std::vector<std::pair<unsigned, unsigned>> pos_edges;
    std::vector<std::pair<unsigned, unsigned>> neg_edges;
    std::vector<unsigned> loops;
};

struct GraphStats {
    unsigned c_plus = 0;  // balanced components
    unsigned c_minus = 0; // unbalanced, loopless
    unsigned c_zero = 0;  // components with loops
    unsigned l = 0;
    unsigned e = 0;
    unsigned v = 0;
    friend bool operator==(const GraphStats &, const GraphStats &) = default;
};

struct ComponentInfo {
    std::vector<unsigned> vertices;
    bool balanced = true;
    bool has_loop = false;
};

/// Components with balance decided by sign propagation (BFS).
std::vector<ComponentInfo> components(const SignedGraph &g);
GraphStats component_stats(const SignedGraph &g);

/// Balance via a fundamental cycle basis: every fundamental cycle of a
/// spanning forest must carry an even number of negative edges (loops are odd
/// cycles).
bool balanced_by_cycle_basis(const SignedGraph &g);

/// Pair index order: (0,1), (0,2), ..., (0,v-1), (1,2), ...
std::vector<std::pair<unsigned, unsigned>> vertex_pairs(unsigned v);

/// Graph with pair states (bit 0: positive edge, bit 1: negative edge) read
/// from the base-4 digits of `edge_code`, loops from the bits of `loop_mask`.
SignedGraph decode_signed_graph(unsigned v, std::uint64_t edge_code, std::uint32_t loop_mask);

const std::vector<std::string> &master_vars();  // t_plus, t_minus, t_zero, x, y
const std::vector<std::string> &unsigned_vars(); // t, y

inline constexpr unsigned kMaxSignedCensusVertices = 5;
inline constexpr unsigned kMaxUnsignedCensusVertices = 7;

/// census[v] = sum over signed graphs on [v] of
/// t_plus^c+ t_minus^c- t_zero^c0 x^l y^e, for v = 0..v_max.
std::vector<MultiPoly> master_census(unsigned v_max);

/// census[v] = sum over simple graphs on [v] of t^c y^e.
std::vector<MultiPoly> unsigned_census(unsigned v_max);

namespace reference {
/// Builds every graph explicitly and classifies it with component_stats.
std::vector<MultiPoly> master_census(unsigned v_max);
} // namespace reference

/// F(2z,1+y)^{(t+ - t-)/2} F(z,(1+y)^2)^{t- - t0} F((1+x)z,(1+y)^2)^{t0}.
TruncSeries master_series(unsigned order);
/// F(z,1+y)^t.
TruncSeries unsigned_series(unsigned order);

/// v! [z^v] of a series, as a polynomial.
MultiPoly egf_coefficient(const TruncSeries &s, unsigned v);

struct MarkedGraphReport {
    unsigned v = 0;
    /// (c, e) -> count
    std::map<std::pair<unsigned, unsigned>, std::uint64_t> marked;
    std::map<std::pair<unsigned, unsigned>, std::uint64_t> balanced;
    /// Every balanced signed graph has exactly 2^{c+} marked preimages and
    /// unbalanced ones have none.
    bool fibres_ok = false;
    /// m(c,e,v) = 2^c b(c,e,v) for every (c,e).
    bool counts_ok = false;
};

/// Marked graphs (simple graph plus vertex signs) versus balanced signed
/// graphs on v vertices, by double enumeration.
MarkedGraphReport marked_graph_check(unsigned v);

/// M via the signed-graph multiplicity lemmas, never touching lattice code.
/// Type A uses simple graphs on n vertices (n coordinates).
TuttePolynomial graph_dictionary_tutte(Family family, unsigned n, LatticeKind lattice);

namespace reference {
TuttePolynomial graph_dictionary_tutte(Family family, unsigned n, LatticeKind lattice);
} // namespace reference

/// Multiplicity of the subset encoded by a signed graph, per the lemmas.
/// `odd_balanced` tells whether some balanced component has an odd vertex
/// count; `size_gcd` is the gcd of the component sizes (type A only).
std::int64_t dictionary_multiplicity(Family family, LatticeKind lattice, const GraphStats &s,
                                     bool odd_balanced, unsigned size_gcd = 1);

} // namespace tuttekit
