#include "tuttekit/tutte.hpp"

#include <algorithm>
#include <numeric>

#include <omp.h>

#include "tuttekit/errors.hpp"

namespace tuttekit {

SubsetCensus::SubsetCensus(unsigned rank_bound, std::size_t size_bound)
    : weight(rank_bound + 1, std::vector<std::int64_t>(size_bound + 1, 0)) {}

void SubsetCensus::add(const SubsetCensus &o) {
    for (std::size_t r = 0; r < weight.size(); ++r) {
        for (std::size_t k = 0; k < weight[r].size(); ++k) {
            weight[r][k] = checked_add(weight[r][k], o.weight[r][k]);
        }
    }
}

MultiPoly polynomial_from_census(const SubsetCensus &census) {
    const auto &vars = tutte_vars();
    const MultiPoly xm1 = MultiPoly::variable(vars, "x") - MultiPoly::constant(vars, Rational(1));
    const MultiPoly ym1 = MultiPoly::variable(vars, "y") - MultiPoly::constant(vars, Rational(1));
    MultiPoly out(vars);
    for (std::size_t r = 0; r < census.weight.size(); ++r) {
        for (std::size_t k = 0; k < census.weight[r].size(); ++k) {
            const std::int64_t w = census.weight[r][k];
            if (w == 0) {
                continue;
            }
            if (r > census.full_rank) {
                throw StructuralError("subset rank exceeds the configuration rank");
            }
            out += xm1.pow(census.full_rank - static_cast<unsigned>(r)) *
                   ym1.pow(static_cast<unsigned>(k)) * Rational(static_cast<long>(w));
        }
    }
    return out;
}

namespace {

void check_capacity(const VectorConfig &config, std::size_t capacity) {
    if (config.size() > capacity) {
        throw CapacityError("brute force over " + std::to_string(config.size()) +
                            " vectors exceeds the capacity bound of " + std::to_string(capacity));
    }
}

struct SweepContext {
    const VectorConfig &config;
    Flavor flavor;
    SubsetCensus &census;
};

void record(SweepContext &ctx, const EchelonLattice &state, std::size_t size) {
    const unsigned r = state.rank();
    const std::int64_t m = ctx.flavor == Flavor::Arithmetic ? state.saturation_index() : 1;
    auto &cell = ctx.census.weight[r][size - r];
    cell = checked_add(cell, m);
}

void sweep(SweepContext &ctx, const EchelonLattice &state, std::size_t size, std::size_t start) {
    for (std::size_t i = start; i < ctx.config.size(); ++i) {
        EchelonLattice next = state;
        next.insert(ctx.config.coordinates(i));
        record(ctx, next, size + 1);
        sweep(ctx, next, size + 1, i + 1);
    }
}

TuttePolynomial finish(const VectorConfig &config, const SubsetCensus &census, Flavor flavor) {
    TuttePolynomial t;
    t.poly = polynomial_from_census(census);
    t.rank = census.full_rank;
    t.ambient_rank = static_cast<unsigned>(config.lattice_rank());
    t.flavor = flavor;
    return t;
}

} // namespace

SubsetCensus subset_census(const VectorConfig &config, Flavor flavor, std::size_t capacity) {
    check_capacity(config, capacity);
    const std::size_t n = config.size();
    const unsigned d = static_cast<unsigned>(config.lattice_rank());
    SubsetCensus total(d, n);
    total.full_rank = config.rank();

    // Include/exclude patterns of the first `split` vectors are the work items.
    const std::size_t split = std::min<std::size_t>(n, 10);
    const long items = 1L << split;
    std::vector<SubsetCensus> partial;
    std::exception_ptr failure;
#pragma omp parallel
    {
#pragma omp single
        partial.assign(static_cast<std::size_t>(omp_get_num_threads()), SubsetCensus(d, n));
        SubsetCensus &mine = partial[static_cast<std::size_t>(omp_get_thread_num())];
        SweepContext ctx{config, flavor, mine};
#pragma omp for schedule(dynamic)
        for (long mask = 0; mask < items; ++mask) {
            try {
                EchelonLattice state(d);
                std::size_t size = 0;
                for (std::size_t i = 0; i < split; ++i) {
                    if (mask & (1L << i)) {
                        state.insert(config.coordinates(i));
                        ++size;
                    }
                }
                if (size == 0) {
                    ++mine.weight[0][0];
                } else {
                    record(ctx, state, size);
                }
                sweep(ctx, state, size, split);
            } catch (...) {
#pragma omp critical
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    for (const auto &p : partial) {
        total.add(p);
    }
    return total;
}

TuttePolynomial arithmetic_tutte_bruteforce(const VectorConfig &config, std::size_t capacity) {
    return finish(config, subset_census(config, Flavor::Arithmetic, capacity), Flavor::Arithmetic);
}

TuttePolynomial classical_tutte_bruteforce(const VectorConfig &config, std::size_t capacity) {
    return finish(config, subset_census(config, Flavor::Classical, capacity), Flavor::Classical);
}

namespace reference {

SubsetCensus subset_census(const VectorConfig &config, Flavor flavor, std::size_t capacity) {
    check_capacity(config, capacity);
    const std::size_t n = config.size();
    SubsetCensus census(static_cast<unsigned>(config.lattice_rank()), n);
    census.full_rank = config.rank();
    std::vector<std::size_t> subset;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        subset.clear();
        for (std::size_t i = 0; i < n; ++i) {
            if (mask >> i & 1u) {
                subset.push_back(i);
            }
        }
        const SubsetStats s = subset_stats(config, subset);
        const std::int64_t m = flavor == Flavor::Arithmetic ? s.multiplicity : 1;
        census.weight[s.rank][subset.size() - s.rank] += m;
    }
    return census;
}

TuttePolynomial arithmetic_tutte_bruteforce(const VectorConfig &config, std::size_t capacity) {
    return finish(config, reference::subset_census(config, Flavor::Arithmetic, capacity), Flavor::Arithmetic);
}

TuttePolynomial classical_tutte_bruteforce(const VectorConfig &config, std::size_t capacity) {
    return finish(config, reference::subset_census(config, Flavor::Classical, capacity), Flavor::Classical);
}

} // namespace reference

CoboundaryPolynomial coboundary_from_tutte(const TuttePolynomial &t) {
    const auto &cv = coboundary_vars();
    const MultiPoly X = MultiPoly::variable(cv, "X");
    const MultiPoly Y = MultiPoly::variable(cv, "Y");
    const MultiPoly one = MultiPoly::constant(cv, Rational(1));
    const MultiPoly x_image = X + Y - one; // x (Y-1)
    const MultiPoly ym1 = Y - one;
    CoboundaryPolynomial c;
    c.rank = t.rank;
    for (const auto &[exps, coeff] : t.poly.terms()) {
        const unsigned i = exps[0];
        const unsigned j = exps[1];
        if (i > t.rank) {
            throw DivisionError("x-degree " + std::to_string(i) + " exceeds rank " +
                                std::to_string(t.rank) + ": rank mismatch");
        }
        c.poly += x_image.pow(i) * ym1.pow(t.rank - i) * Y.pow(j) * coeff;
    }
    return c;
}

TuttePolynomial tutte_from_coboundary(const CoboundaryPolynomial &c, unsigned ambient_rank,
                                      Flavor flavor) {
    const auto &tv = tutte_vars();
    const MultiPoly x = MultiPoly::variable(tv, "x");
    const MultiPoly y = MultiPoly::variable(tv, "y");
    const MultiPoly one = MultiPoly::constant(tv, Rational(1));
    const MultiPoly substituted =
        substitute(c.poly.with_vars(coboundary_vars()), {{"X", (x - one) * (y - one)}, {"Y", y}}, tv);
    TuttePolynomial t;
    t.poly = divide_exact(substituted, (y - one).pow(c.rank));
    t.rank = c.rank;
    t.ambient_rank = ambient_rank;
    t.flavor = flavor;
    return t;
}

} // namespace tuttekit
