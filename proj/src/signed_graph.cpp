#include "tuttekit/signed_graph.hpp"

#include <array>
#include <bit>
#include <numeric>
#include <queue>

#include <omp.h>

#include "tuttekit/errors.hpp"

namespace tuttekit {

std::vector<std::pair<unsigned, unsigned>> vertex_pairs(unsigned v) {
    std::vector<std::pair<unsigned, unsigned>> out;
    for (unsigned i = 0; i < v; ++i) {
        for (unsigned j = i + 1; j < v; ++j) {
            out.emplace_back(i, j);
        }
    }
    return out;
}

SignedGraph decode_signed_graph(unsigned v, std::uint64_t edge_code, std::uint32_t loop_mask) {
    SignedGraph g;
    g.v = v;
    for (const auto &pr : vertex_pairs(v)) {
        const unsigned state = edge_code & 3u;
        edge_code >>= 2;
        if (state & 1u) {
            g.pos_edges.push_back(pr);
        }
        if (state & 2u) {
            g.neg_edges.push_back(pr);
        }
    }
    for (unsigned i = 0; i < v; ++i) {
        if (loop_mask >> i & 1u) {
            g.loops.push_back(i);
        }
    }
    return g;
}

std::vector<ComponentInfo> components(const SignedGraph &g) {
    // adjacency with edge parity (0 positive, 1 negative)
    std::vector<std::vector<std::pair<unsigned, unsigned>>> adj(g.v);
    auto add = [&](const std::vector<std::pair<unsigned, unsigned>> &edges, unsigned parity) {
        for (auto [a, b] : edges) {
            if (a >= g.v || b >= g.v || a == b) {
                throw PreconditionError("invalid edge in signed graph");
            }
            adj[a].emplace_back(b, parity);
            adj[b].emplace_back(a, parity);
        }
    };
    add(g.pos_edges, 0);
    add(g.neg_edges, 1);
    std::vector<bool> loop(g.v, false);
    for (auto u : g.loops) {
        if (u >= g.v) {
            throw PreconditionError("invalid loop in signed graph");
        }
        loop[u] = true;
    }

    std::vector<int> sign(g.v, -1);
    std::vector<ComponentInfo> out;
    for (unsigned s = 0; s < g.v; ++s) {
        if (sign[s] >= 0) {
            continue;
        }
        ComponentInfo comp;
        std::queue<unsigned> todo;
        sign[s] = 0;
        todo.push(s);
        while (!todo.empty()) {
            const unsigned u = todo.front();
            todo.pop();
            comp.vertices.push_back(u);
            comp.has_loop = comp.has_loop || loop[u];
            for (auto [w, parity] : adj[u]) {
                const int want = sign[u] ^ static_cast<int>(parity);
                if (sign[w] < 0) {
                    sign[w] = want;
                    todo.push(w);
                } else if (sign[w] != want) {
                    comp.balanced = false;
                }
            }
        }
        if (comp.has_loop) {
            comp.balanced = false;
        }
        out.push_back(std::move(comp));
    }
    return out;
}

GraphStats component_stats(const SignedGraph &g) {
    GraphStats s;
    s.v = g.v;
    s.l = static_cast<unsigned>(g.loops.size());
    s.e = static_cast<unsigned>(g.pos_edges.size() + g.neg_edges.size());
    for (const auto &c : components(g)) {
        if (c.has_loop) {
            ++s.c_zero;
        } else if (c.balanced) {
            ++s.c_plus;
        } else {
            ++s.c_minus;
        }
    }
    return s;
}

bool balanced_by_cycle_basis(const SignedGraph &g) {
    if (!g.loops.empty()) {
        return false;
    }
    struct Edge {
        unsigned a, b, parity;
    };
    std::vector<Edge> edges;
    for (auto [a, b] : g.pos_edges) {
        edges.push_back({a, b, 0});
    }
    for (auto [a, b] : g.neg_edges) {
        edges.push_back({a, b, 1});
    }
    // Spanning forest by union-find; tree adjacency for path queries.
    std::vector<unsigned> root(g.v);
    std::iota(root.begin(), root.end(), 0u);
    auto find = [&](unsigned x) {
        while (root[x] != x) {
            x = root[x];
        }
        return x;
    };
    std::vector<std::vector<std::pair<unsigned, unsigned>>> tree(g.v);
    std::vector<Edge> chords;
    for (const auto &e : edges) {
        const unsigned ra = find(e.a), rb = find(e.b);
        if (ra == rb) {
            chords.push_back(e);
        } else {
            root[rb] = ra;
            tree[e.a].emplace_back(e.b, e.parity);
            tree[e.b].emplace_back(e.a, e.parity);
        }
    }
    // Each chord closes one fundamental cycle: chord parity plus tree-path parity.
    auto path_parity = [&](unsigned from, unsigned to) {
        std::vector<int> par(g.v, -1);
        std::queue<unsigned> todo;
        par[from] = 0;
        todo.push(from);
        while (!todo.empty()) {
            const unsigned u = todo.front();
            todo.pop();
            for (auto [w, p] : tree[u]) {
                if (par[w] < 0) {
                    par[w] = par[u] ^ static_cast<int>(p);
                    todo.push(w);
                }
            }
        }
        return static_cast<unsigned>(par[to]);
    };
    for (const auto &c : chords) {
        if ((c.parity ^ path_parity(c.a, c.b)) != 0) {
            return false;
        }
    }
    return true;
}

const std::vector<std::string> &master_vars() {
    static const std::vector<std::string> v{"t_plus", "t_minus", "t_zero", "x", "y"};
    return v;
}

const std::vector<std::string> &unsigned_vars() {
    static const std::vector<std::string> v{"t", "y"};
    return v;
}

namespace {

constexpr unsigned kMaxV = 8;

std::uint64_t pow_u64(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) {
        r *= b;
    }
    return r;
}

/// Components of the loopless part of a signed graph, from parity union-find.
struct EdgePhase {
    unsigned ncomp = 0;
    unsigned e = 0;
    std::array<std::uint32_t, kMaxV> mask{};
    std::array<unsigned, kMaxV> size{};
    std::array<bool, kMaxV> unbalanced{};
};

EdgePhase edge_phase(unsigned v, const std::vector<std::pair<unsigned, unsigned>> &pairs,
                     std::uint64_t code, unsigned bits_per_pair) {
    std::array<unsigned, kMaxV> parent{};
    std::array<unsigned, kMaxV> par{};
    std::array<bool, kMaxV> bad{};
    for (unsigned i = 0; i < v; ++i) {
        parent[i] = i;
    }
    auto find = [&](unsigned x, unsigned &p) {
        p = 0;
        while (parent[x] != x) {
            p ^= par[x];
            x = parent[x];
        }
        return x;
    };
    auto unite = [&](unsigned a, unsigned b, unsigned s) {
        unsigned pa, pb;
        const unsigned ra = find(a, pa), rb = find(b, pb);
        if (ra == rb) {
            if ((pa ^ pb) != s) {
                bad[ra] = true;
            }
        } else {
            parent[rb] = ra;
            par[rb] = pa ^ pb ^ s;
            bad[ra] = bad[ra] || bad[rb];
        }
    };
    EdgePhase out;
    const std::uint64_t digit_mask = (1u << bits_per_pair) - 1;
    for (const auto &[a, b] : pairs) {
        const unsigned state = static_cast<unsigned>(code & digit_mask);
        code >>= bits_per_pair;
        if (state & 1u) {
            unite(a, b, 0);
            ++out.e;
        }
        if (state & 2u) {
            unite(a, b, 1);
            ++out.e;
        }
    }
    std::array<int, kMaxV> slot{};
    slot.fill(-1);
    for (unsigned i = 0; i < v; ++i) {
        unsigned p;
        const unsigned r = find(i, p);
        if (slot[r] < 0) {
            slot[r] = static_cast<int>(out.ncomp++);
        }
        const auto k = static_cast<unsigned>(slot[r]);
        out.mask[k] |= 1u << i;
        ++out.size[k];
    }
    for (unsigned i = 0; i < v; ++i) {
        if (parent[i] == i) {
            out.unbalanced[static_cast<unsigned>(slot[i])] = bad[i];
        }
    }
    return out;
}

struct LoopPhase {
    GraphStats stats;
    bool odd_balanced = false;
};

LoopPhase loop_phase(unsigned v, const EdgePhase &ep, std::uint32_t loops) {
    LoopPhase out;
    out.stats.v = v;
    out.stats.e = ep.e;
    out.stats.l = static_cast<unsigned>(std::popcount(loops));
    for (unsigned k = 0; k < ep.ncomp; ++k) {
        if (ep.mask[k] & loops) {
            ++out.stats.c_zero;
        } else if (ep.unbalanced[k]) {
            ++out.stats.c_minus;
        } else {
            ++out.stats.c_plus;
            out.odd_balanced = out.odd_balanced || (ep.size[k] % 2 == 1);
        }
    }
    return out;
}

void check_vertices(unsigned v, unsigned cap) {
    if (v > cap) {
        throw CapacityError("graph enumeration on " + std::to_string(v) +
                            " vertices exceeds the bound of " + std::to_string(cap));
    }
}

/// Visits every signed graph on v vertices (loops optional). `make` builds a
/// per-thread accumulator; `visit(acc, loop_phase)`; returns the accumulators.
template <class Acc, class Make, class Visit>
std::vector<Acc> sweep_signed(unsigned v, bool with_loops, Make make, Visit visit) {
    const auto pairs = vertex_pairs(v);
    const std::uint64_t codes = pow_u64(4, static_cast<unsigned>(pairs.size()));
    const std::uint32_t loop_masks = with_loops ? (1u << v) : 1u;
    std::vector<Acc> accs;
#pragma omp parallel
    {
#pragma omp single
        {
            for (int t = 0; t < omp_get_num_threads(); ++t) {
                accs.push_back(make());
            }
        }
        Acc &acc = accs[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static, 256)
        for (long long code = 0; code < static_cast<long long>(codes); ++code) {
            const EdgePhase ep = edge_phase(v, pairs, static_cast<std::uint64_t>(code), 2);
            for (std::uint32_t loops = 0; loops < loop_masks; ++loops) {
                visit(acc, loop_phase(v, ep, loops));
            }
        }
    }
    return accs;
}

struct DenseCensus {
    unsigned v;
    unsigned emax;
    std::vector<std::uint64_t> counts;
    explicit DenseCensus(unsigned v_)
        : v(v_), emax(v_ * (v_ > 0 ? v_ - 1 : 0)),
          counts(static_cast<std::size_t>(v_ + 1) * (v_ + 1) * (v_ + 1) * (v_ + 1) * (emax + 1), 0) {}
    std::size_t index(const GraphStats &s) const {
        return (((static_cast<std::size_t>(s.c_plus) * (v + 1) + s.c_minus) * (v + 1) + s.c_zero) *
                    (v + 1) +
                s.l) *
                   (emax + 1) +
               s.e;
    }
    void add(const DenseCensus &o) {
        for (std::size_t i = 0; i < counts.size(); ++i) {
            counts[i] += o.counts[i];
        }
    }
    MultiPoly to_poly() const {
        std::vector<std::pair<MultiPoly::Key, Rational>> terms;
        MultiPoly shape(master_vars());
        std::size_t i = 0;
        for (unsigned cp = 0; cp <= v; ++cp) {
            for (unsigned cm = 0; cm <= v; ++cm) {
                for (unsigned c0 = 0; c0 <= v; ++c0) {
                    for (unsigned l = 0; l <= v; ++l) {
                        for (unsigned e = 0; e <= emax; ++e, ++i) {
                            if (counts[i] != 0) {
                                terms.emplace_back(shape.pack({cp, cm, c0, l, e}),
                                                   Rational(BigInt(std::to_string(counts[i]))));
                            }
                        }
                    }
                }
            }
        }
        return MultiPoly::from_raw(master_vars(), std::move(terms));
    }
};

unsigned gcd_sizes(const EdgePhase &ep) {
    unsigned g = 0;
    for (unsigned k = 0; k < ep.ncomp; ++k) {
        g = std::gcd(g, ep.size[k]);
    }
    return g;
}

SubsetCensus dictionary_census(Family family, unsigned n, LatticeKind lattice) {
    const unsigned P = n * (n - 1) / 2;
    if (family == Family::A) {
        check_vertices(n, kMaxUnsignedCensusVertices);
        SubsetCensus total(n, P);
        total.full_rank = n - 1;
        const auto pairs = vertex_pairs(n);
        const std::uint64_t codes = std::uint64_t{1} << P;
        std::vector<SubsetCensus> accs;
#pragma omp parallel
        {
#pragma omp single
            accs.assign(static_cast<std::size_t>(omp_get_num_threads()), SubsetCensus(n, P));
            auto &acc = accs[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static, 256)
            for (long long code = 0; code < static_cast<long long>(codes); ++code) {
                const EdgePhase ep = edge_phase(n, pairs, static_cast<std::uint64_t>(code), 1);
                GraphStats s;
                s.v = n;
                s.e = ep.e;
                s.c_plus = ep.ncomp;
                const unsigned r = n - ep.ncomp;
                acc.weight[r][ep.e - r] +=
                    dictionary_multiplicity(family, lattice, s, false, gcd_sizes(ep));
            }
        }
        for (const auto &a : accs) {
            total.add(a);
        }
        return total;
    }
    check_vertices(n, kMaxSignedCensusVertices);
    const bool loops = family != Family::D;
    const std::size_t size_bound = 2 * P + (loops ? n : 0);
    auto accs = sweep_signed<SubsetCensus>(
        n, loops, [&] { return SubsetCensus(n, size_bound); },
        [&](SubsetCensus &acc, const LoopPhase &lp) {
            const GraphStats &s = lp.stats;
            const unsigned r = s.v - s.c_plus;
            acc.weight[r][s.l + s.e - r] +=
                dictionary_multiplicity(family, lattice, s, lp.odd_balanced);
        });
    SubsetCensus total(n, size_bound);
    total.full_rank = n;
    for (const auto &a : accs) {
        total.add(a);
    }
    return total;
}

unsigned ambient_rank_of(Family family, unsigned n, LatticeKind lattice) {
    if (family == Family::A) {
        return lattice == LatticeKind::Root || lattice == LatticeKind::Weight ? n - 1 : n;
    }
    return n;
}

TuttePolynomial census_to_tutte(const SubsetCensus &c, Family family, unsigned n,
                                LatticeKind lattice) {
    TuttePolynomial t;
    t.poly = polynomial_from_census(c);
    t.rank = c.full_rank;
    t.ambient_rank = ambient_rank_of(family, n, lattice);
    t.flavor = lattice == LatticeKind::Classical ? Flavor::Classical : Flavor::Arithmetic;
    return t;
}

void check_dictionary_spec(Family family, unsigned n) {
    if (n == 0 || (family == Family::D && n < 2)) {
        throw PreconditionError("invalid rank for the graph dictionary");
    }
}

} // namespace

std::int64_t dictionary_multiplicity(Family family, LatticeKind lattice, const GraphStats &s,
                                     bool odd_balanced, unsigned size_gcd) {
    auto p2 = [](unsigned k) { return std::int64_t{1} << k; };
    const bool balanced = s.c_minus == 0 && s.c_zero == 0;
    switch (lattice) {
    case LatticeKind::Classical:
        return 1;
    case LatticeKind::Integer:
        switch (family) {
        case Family::A:
            return 1;
        case Family::B:
        case Family::D:
            return p2(s.c_minus);
        case Family::C:
            return p2(s.c_zero + s.c_minus);
        }
        break;
    case LatticeKind::Root:
        switch (family) {
        case Family::A:
            return 1;
        case Family::B:
            return p2(s.c_minus);
        case Family::C:
            return balanced ? 1 : p2(s.c_minus + s.c_zero - 1);
        case Family::D:
            return balanced ? 1 : p2(s.c_minus - 1);
        }
        break;
    case LatticeKind::Weight:
        switch (family) {
        case Family::A:
            return size_gcd;
        case Family::B:
        case Family::D:
            return odd_balanced ? p2(s.c_minus) : p2(s.c_minus + 1);
        case Family::C:
            return p2(s.c_zero + s.c_minus);
        }
        break;
    }
    throw UnsupportedError("no multiplicity rule for this family and lattice");
}

std::vector<MultiPoly> master_census(unsigned v_max) {
    check_vertices(v_max, kMaxSignedCensusVertices);
    std::vector<MultiPoly> out;
    for (unsigned v = 0; v <= v_max; ++v) {
        auto accs = sweep_signed<DenseCensus>(
            v, true, [&] { return DenseCensus(v); },
            [](DenseCensus &acc, const LoopPhase &lp) { ++acc.counts[acc.index(lp.stats)]; });
        DenseCensus total(v);
        for (const auto &a : accs) {
            total.add(a);
        }
        out.push_back(total.to_poly());
    }
    return out;
}

std::vector<MultiPoly> unsigned_census(unsigned v_max) {
    check_vertices(v_max, kMaxUnsignedCensusVertices);
    std::vector<MultiPoly> out;
    MultiPoly shape(unsigned_vars());
    for (unsigned v = 0; v <= v_max; ++v) {
        const auto pairs = vertex_pairs(v);
        const unsigned P = static_cast<unsigned>(pairs.size());
        std::vector<std::uint64_t> counts((v + 1) * (P + 1), 0);
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << P); ++code) {
            const EdgePhase ep = edge_phase(v, pairs, code, 1);
            ++counts[ep.ncomp * (P + 1) + ep.e];
        }
        std::vector<std::pair<MultiPoly::Key, Rational>> terms;
        for (unsigned c = 0; c <= v; ++c) {
            for (unsigned e = 0; e <= P; ++e) {
                if (auto n = counts[c * (P + 1) + e]) {
                    terms.emplace_back(shape.pack({c, e}), Rational(BigInt(std::to_string(n))));
                }
            }
        }
        out.push_back(MultiPoly::from_raw(unsigned_vars(), std::move(terms)));
    }
    return out;
}

namespace reference {

std::vector<MultiPoly> master_census(unsigned v_max) {
    check_vertices(v_max, kMaxSignedCensusVertices);
    std::vector<MultiPoly> out;
    for (unsigned v = 0; v <= v_max; ++v) {
        std::map<Exponents, std::uint64_t> counts;
        const std::uint64_t codes = pow_u64(4, v * (v - (v > 0)) / 2);
        for (std::uint64_t code = 0; code < codes; ++code) {
            for (std::uint32_t loops = 0; loops < (1u << v); ++loops) {
                const GraphStats s = component_stats(decode_signed_graph(v, code, loops));
                ++counts[{s.c_plus, s.c_minus, s.c_zero, s.l, s.e}];
            }
        }
        MultiPoly p(master_vars());
        for (const auto &[exps, n] : counts) {
            p += MultiPoly::monomial(master_vars(), exps, Rational(BigInt(std::to_string(n))));
        }
        out.push_back(p);
    }
    return out;
}

TuttePolynomial graph_dictionary_tutte(Family family, unsigned n, LatticeKind lattice) {
    check_dictionary_spec(family, n);
    const unsigned P = n * (n - 1) / 2;
    const bool signed_edges = family != Family::A;
    const bool loops = family == Family::B || family == Family::C;
    check_vertices(n, signed_edges ? kMaxSignedCensusVertices : kMaxUnsignedCensusVertices);
    const std::size_t size_bound = (signed_edges ? 2 * P : P) + (loops ? n : 0);
    SubsetCensus census(n, size_bound);
    census.full_rank = family == Family::A ? n - 1 : n;
    const std::uint64_t codes = signed_edges ? pow_u64(4, P) : pow_u64(2, P);
    for (std::uint64_t raw = 0; raw < codes; ++raw) {
        // unsigned graphs use positive edges only: spread each bit to a base-4 digit
        std::uint64_t code = raw;
        if (!signed_edges) {
            code = 0;
            for (unsigned b = 0; b < P; ++b) {
                code |= (raw >> b & 1u) << (2 * b);
            }
        }
        for (std::uint32_t lm = 0; lm < (loops ? (1u << n) : 1u); ++lm) {
            const SignedGraph g = decode_signed_graph(n, code, lm);
            const auto comps = components(g);
            const GraphStats s = component_stats(g);
            bool odd_balanced = false;
            unsigned g_sizes = 0;
            for (const auto &c : comps) {
                g_sizes = std::gcd(g_sizes, static_cast<unsigned>(c.vertices.size()));
                if (c.balanced && c.vertices.size() % 2 == 1) {
                    odd_balanced = true;
                }
            }
            const unsigned r = family == Family::A ? n - static_cast<unsigned>(comps.size())
                                                   : n - s.c_plus;
            census.weight[r][s.l + s.e - r] +=
                dictionary_multiplicity(family, lattice, s, odd_balanced, g_sizes);
        }
    }
    return census_to_tutte(census, family, n, lattice);
}

} // namespace reference

TruncSeries master_series(unsigned order) {
    const auto &mv = master_vars();
    auto var = [&](const char *name) { return MultiPoly::variable(mv, name); };
    const MultiPoly one = MultiPoly::constant(mv, Rational(1));
    const MultiPoly one_plus_y = one + var("y");
    const MultiPoly sq = one_plus_y * one_plus_y;
    const TruncSeries a =
        series_pow(deformed_exponential(one * Rational(2), one_plus_y, order),
                   (var("t_plus") - var("t_minus")) * Rational(1, 2));
    const TruncSeries b = series_pow(deformed_exponential(one, sq, order), var("t_minus") - var("t_zero"));
    const TruncSeries c = series_pow(deformed_exponential(one + var("x"), sq, order), var("t_zero"));
    return a * b * c;
}

TruncSeries unsigned_series(unsigned order) {
    const auto &uv = unsigned_vars();
    const MultiPoly one = MultiPoly::constant(uv, Rational(1));
    return series_pow(deformed_exponential(one, one + MultiPoly::variable(uv, "y"), order),
                      MultiPoly::variable(uv, "t"));
}

MultiPoly egf_coefficient(const TruncSeries &s, unsigned v) {
    return s[v] * factorial(v);
}

MarkedGraphReport marked_graph_check(unsigned v) {
    check_vertices(v, kMaxSignedCensusVertices);
    MarkedGraphReport rep;
    rep.v = v;
    const auto pairs = vertex_pairs(v);
    const unsigned P = static_cast<unsigned>(pairs.size());
    std::vector<std::uint32_t> preimages(pow_u64(4, P), 0);
    for (std::uint64_t g = 0; g < (std::uint64_t{1} << P); ++g) {
        const EdgePhase ep = edge_phase(v, pairs, g, 1);
        for (std::uint32_t signs = 0; signs < (1u << v); ++signs) {
            std::uint64_t code = 0;
            for (unsigned p = 0; p < P; ++p) {
                if (g >> p & 1u) {
                    const auto [a, b] = pairs[p];
                    const bool negative = ((signs >> a) ^ (signs >> b)) & 1u;
                    code |= std::uint64_t{negative ? 2u : 1u} << (2 * p);
                }
            }
            ++preimages[code];
            ++rep.marked[{ep.ncomp, ep.e}];
        }
    }
    rep.fibres_ok = true;
    for (std::uint64_t code = 0; code < preimages.size(); ++code) {
        const EdgePhase ep = edge_phase(v, pairs, code, 2);
        const LoopPhase lp = loop_phase(v, ep, 0);
        const bool balanced = lp.stats.c_minus == 0;
        const std::uint64_t expected = balanced ? (std::uint64_t{1} << lp.stats.c_plus) : 0;
        if (preimages[code] != expected) {
            rep.fibres_ok = false;
        }
        if (balanced) {
            ++rep.balanced[{lp.stats.c_plus, lp.stats.e}];
        }
    }
    rep.counts_ok = rep.marked.size() == rep.balanced.size();
    for (const auto &[key, b] : rep.balanced) {
        auto it = rep.marked.find(key);
        if (it == rep.marked.end() || it->second != (b << key.first)) {
            rep.counts_ok = false;
        }
    }
    return rep;
}

TuttePolynomial graph_dictionary_tutte(Family family, unsigned n, LatticeKind lattice) {
    check_dictionary_spec(family, n);
    return census_to_tutte(dictionary_census(family, n, lattice), family, n, lattice);
}

} // namespace tuttekit
