#include "tuttekit/finite_field.hpp"

#include <random>

#include <omp.h>

#include "tuttekit/errors.hpp"

namespace tuttekit {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1u) {
            r = mulmod(r, b, m);
        }
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

std::uint64_t point_count(std::uint64_t q, std::size_t d, std::uint64_t capacity) {
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < d; ++i) {
        if (q != 0 && n > capacity / q) {
            throw CapacityError("finite torus has more than " + std::to_string(capacity) + " points");
        }
        n *= q;
    }
    return n;
}

void check_prime(std::uint64_t p) {
    if (!is_prime(p)) {
        throw PreconditionError(std::to_string(p) + " is not prime");
    }
}

void check_admissible(const VectorConfig &config, std::uint64_t p, std::int64_t divisor,
                      std::uint64_t offset) {
    check_prime(p);
    const std::int64_t D = divisor > 0 ? divisor : multiplicity_lcm(config);
    if (p <= offset || (p - offset) % static_cast<std::uint64_t>(D) != 0) {
        throw PreconditionError("p = " + std::to_string(p) + " is not admissible: " +
                                std::to_string(D) + " does not divide p - " +
                                std::to_string(offset));
    }
}

TorusProfile kernel(const VectorConfig &config, std::uint64_t p, std::uint64_t capacity) {
    const std::uint64_t q = p - 1;
    const std::size_t d = config.lattice_rank();
    const std::size_t n = config.size();
    point_count(q, d, capacity);
    TorusProfile prof;
    prof.prime = p;
    prof.rank = static_cast<unsigned>(d);
    prof.histogram.assign(n + 1, 0);
    if (d == 0) {
        prof.histogram[n] = 1; // the trivial torus lies on every hypertorus
        return prof;
    }

    // Writing each coordinate as g^k for a primitive root g, a vector a lies on its hypertorus iff
    // sum_i c_i k_i = 0 mod q. Coefficients are reduced mod q once.
    std::vector<std::vector<std::uint64_t>> coef(d, std::vector<std::uint64_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t i = 0; i < d; ++i) {
            const std::int64_t c = config.coordinates(a)[i] % static_cast<std::int64_t>(q);
            coef[i][a] = static_cast<std::uint64_t>(c < 0 ? c + static_cast<std::int64_t>(q) : c);
        }
    }

    std::vector<std::vector<std::uint64_t>> partial;
#pragma omp parallel
    {
#pragma omp single
        partial.assign(static_cast<std::size_t>(omp_get_num_threads()),
                       std::vector<std::uint64_t>(n + 1, 0));
        auto &hist = partial[static_cast<std::size_t>(omp_get_thread_num())];
        // sums[level][a] = sum_{i < level} coef[i][a] k_i mod q
        std::vector<std::vector<std::uint64_t>> sums(d + 1, std::vector<std::uint64_t>(n, 0));
        auto walk = [&](auto &&self, std::size_t level) -> void {
            auto &cur = sums[level + 1];
            cur = sums[level];
            const auto &step = coef[level];
            for (std::uint64_t k = 0; k < q; ++k) {
                if (level + 1 == d) {
                    unsigned h = 0;
                    for (std::size_t a = 0; a < n; ++a) {
                        h += cur[a] == 0;
                    }
                    ++hist[h];
                } else {
                    self(self, level + 1);
                }
                for (std::size_t a = 0; a < n; ++a) {
                    const std::uint64_t s = cur[a] + step[a];
                    cur[a] = s >= q ? s - q : s;
                }
            }
        };
#pragma omp for schedule(dynamic)
        for (long k0 = 0; k0 < static_cast<long>(q); ++k0) {
            for (std::size_t a = 0; a < n; ++a) {
                sums[1][a] = mulmod(coef[0][a], static_cast<std::uint64_t>(k0), q);
            }
            if (d == 1) {
                unsigned h = 0;
                for (std::size_t a = 0; a < n; ++a) {
                    h += sums[1][a] == 0;
                }
                ++hist[h];
            } else {
                walk(walk, 1);
            }
        }
    }
    for (const auto &h : partial) {
        for (std::size_t i = 0; i <= n; ++i) {
            prof.histogram[i] += h[i];
        }
    }
    return prof;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            return false;
        }
    }
    return true;
}

MultiPoly TorusProfile::as_poly() const {
    const std::vector<std::string> vars{"Y"};
    MultiPoly out(vars);
    for (std::size_t h = 0; h < histogram.size(); ++h) {
        if (histogram[h] != 0) {
            out += MultiPoly::monomial(vars, {static_cast<unsigned>(h)},
                                       Rational(BigInt(std::to_string(histogram[h]))));
        }
    }
    return out;
}

BigInt TorusProfile::total() const {
    BigInt t = 0;
    for (auto c : histogram) {
        t += BigInt(std::to_string(c));
    }
    return t;
}

std::uint64_t find_admissible_prime(std::uint64_t divisor, std::uint64_t min_p,
                                    std::uint64_t search_cap) {
    if (divisor == 0) {
        throw PreconditionError("divisor must be positive");
    }
    // p = 1 + k D
    std::uint64_t k = min_p <= 1 ? 0 : (min_p - 1) / divisor;
    for (;; ++k) {
        const std::uint64_t p = 1 + k * divisor;
        if (p > search_cap) {
            throw CapacityError("no admissible prime below " + std::to_string(search_cap));
        }
        if (p >= min_p && is_prime(p)) {
            return p;
        }
    }
}

std::int64_t admissibility_divisor(const RootSystemSpec &spec, const VectorConfig &config) {
    if (config.size() <= 22) {
        return multiplicity_lcm(config);
    }
    const std::int64_t D = known_multiplicity_divisor(spec);
    std::mt19937_64 rng(0x5eed);
    std::vector<std::size_t> subset;
    for (int trial = 0; trial < 2000; ++trial) {
        subset.clear();
        for (std::size_t i = 0; i < config.size(); ++i) {
            if (rng() & 1u) {
                subset.push_back(i);
            }
        }
        const auto m = subset_stats(config, subset).multiplicity;
        if (D % m != 0) {
            throw StructuralError("sampled multiplicity " + std::to_string(m) +
                                  " does not divide the known divisor " + std::to_string(D));
        }
    }
    return D;
}

TorusProfile torus_profile(const VectorConfig &config, std::uint64_t p, std::int64_t divisor,
                           std::uint64_t capacity) {
    check_admissible(config, p, divisor, 1);
    return kernel(config, p, capacity);
}

namespace reference {

TorusProfile torus_profile(const VectorConfig &config, std::uint64_t p, std::int64_t divisor,
                           std::uint64_t capacity) {
    check_admissible(config, p, divisor, 1);
    const std::uint64_t q = p - 1;
    const std::size_t d = config.lattice_rank();
    const std::size_t n = config.size();
    const std::uint64_t points = point_count(q, d, capacity);
    TorusProfile prof;
    prof.prime = p;
    prof.rank = static_cast<unsigned>(d);
    prof.histogram.assign(n + 1, 0);
    std::vector<std::uint64_t> t(d);
    for (std::uint64_t idx = 0; idx < points; ++idx) {
        std::uint64_t rest = idx;
        for (std::size_t i = 0; i < d; ++i) {
            t[i] = 1 + rest % q;
            rest /= q;
        }
        unsigned h = 0;
        for (std::size_t a = 0; a < n; ++a) {
            std::uint64_t value = 1;
            for (std::size_t i = 0; i < d; ++i) {
                const std::int64_t c = config.coordinates(a)[i];
                const std::uint64_t base = c >= 0 ? t[i] : powmod(t[i], p - 2, p);
                value = mulmod(value, powmod(base, static_cast<std::uint64_t>(c >= 0 ? c : -c), p), p);
            }
            h += value == 1;
        }
        ++prof.histogram[h];
    }
    return prof;
}

} // namespace reference

MultiPoly finite_field_prediction(const CoboundaryPolynomial &psi, unsigned lattice_rank,
                                  std::uint64_t p) {
    if (lattice_rank < psi.rank) {
        throw StructuralError("lattice rank below configuration rank");
    }
    const std::vector<std::string> yv{"Y"};
    const Rational q(BigInt(std::to_string(p - 1)));
    const MultiPoly at_q = substitute(psi.poly.with_vars(coboundary_vars()),
                                      {{"X", MultiPoly::constant(yv, q)}}, yv);
    return at_q * pow(q, lattice_rank - psi.rank);
}

bool verify_finite_field_identity(const VectorConfig &config, std::uint64_t p,
                                  const CoboundaryPolynomial &psi, std::int64_t divisor) {
    const TorusProfile prof = torus_profile(config, p, divisor);
    return prof.as_poly() ==
           finite_field_prediction(psi, static_cast<unsigned>(config.lattice_rank()), p);
}

bool verify_classical_mode(const VectorConfig &config, std::uint64_t s,
                           const CoboundaryPolynomial &classical_psi) {
    check_admissible(config, s, 0, 2);
    const TorusProfile prof = kernel(config, s, kDefaultTorusCapacity);
    return prof.as_poly() ==
           finite_field_prediction(classical_psi, static_cast<unsigned>(config.lattice_rank()), s);
}

} // namespace tuttekit
