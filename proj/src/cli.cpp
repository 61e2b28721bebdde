#include "tuttekit/cli.hpp"

#include <cstdlib>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <omp.h>

#include "tuttekit/errors.hpp"
#include "tuttekit/finite_field.hpp"
#include "tuttekit/fixtures.hpp"
#include "tuttekit/genfun.hpp"
#include "tuttekit/invariants.hpp"
#include "tuttekit/json_io.hpp"
#include "tuttekit/signed_graph.hpp"

namespace tuttekit::cli {

namespace {

struct UsageError : Error {
    using Error::Error;
};

struct Options {
    std::string system;
    bool type_a_rank = false;
    std::string method = "bruteforce";
    std::string output = "text";
    unsigned order = 0;
    int threads = 0;
    std::string prime = "auto";
    bool signed_graphs = false;
    unsigned max_v = 4;
    std::string lattice = "weight";
    unsigned max_n = 4;
    std::string report = "tutte";
};

RootSystemSpec parse_system(const Options &o) {
    if (o.system.empty()) {
        throw UsageError("--system is required (e.g. C:2:integer)");
    }
    try {
        RootSystemSpec s = RootSystemSpec::parse(o.system, o.type_a_rank);
        s.validate();
        return s;
    } catch (const PreconditionError &e) {
        throw UsageError(e.what());
    }
}

void check_output(const Options &o) {
    if (o.output != "text" && o.output != "json") {
        throw UsageError("--output must be text or json");
    }
}

TuttePolynomial compute_with(const RootSystemSpec &spec, const std::string &method, unsigned order) {
    if (method == "bruteforce") {
        const VectorConfig cfg = build_config(spec);
        return spec.lattice == LatticeKind::Classical ? classical_tutte_bruteforce(cfg)
                                                      : arithmetic_tutte_bruteforce(cfg);
    }
    if (method == "genfun") {
        return extract_polynomial({spec.family, spec.lattice, std::max(order, spec.n)}, spec.n);
    }
    if (method == "graphs") {
        return graph_dictionary_tutte(spec.family, spec.n, spec.lattice);
    }
    throw UsageError("compute supports --method bruteforce, genfun or graphs");
}

std::string row_name(const RootSystemSpec &s) {
    return std::string(1, family_char(s.family)) + std::to_string(s.n);
}

// ---- compute ---------------------------------------------------------------

int cmd_compute(const Options &o, std::ostream &out) {
    check_output(o);
    const RootSystemSpec spec = parse_system(o);
    const TuttePolynomial t = compute_with(spec, o.method, o.order);
    const CoboundaryPolynomial psi = coboundary_from_tutte(t);
    if (o.output == "json") {
        Json j{{"system", spec.to_string()},
               {"method", o.method},
               {"tutte", tutte_to_json(t)},
               {"coboundary", coboundary_to_json(psi)}};
        out << j.dump(2) << "\n";
    } else {
        out << "system: " << spec.to_string() << "\n"
            << "method: " << o.method << "\n"
            << "flavor: " << (t.flavor == Flavor::Arithmetic ? "arithmetic" : "classical") << "\n"
            << "rank: " << t.rank << "\n"
            << "lattice rank: " << t.ambient_rank << "\n"
            << "tutte: " << t.poly << "\n"
            << "coboundary: " << psi.poly << "\n";
    }
    return kOk;
}

// ---- verify ----------------------------------------------------------------

struct Check {
    std::string name;
    bool ok = false;
    bool skipped = false;
    std::string detail;
};

struct Report {
    std::vector<Check> checks;
    void add(std::string name, bool ok, std::string detail = {}) {
        checks.push_back({std::move(name), ok, false, std::move(detail)});
    }
    void skip(std::string name, std::string why) {
        checks.push_back({std::move(name), true, true, std::move(why)});
    }
    [[nodiscard]] bool all_ok() const {
        for (const auto &c : checks) {
            if (!c.ok) {
                return false;
            }
        }
        return true;
    }
    void print(std::ostream &out, const std::string &format, Json extra = Json::object()) const {
        if (format == "json") {
            Json arr = Json::array();
            for (const auto &c : checks) {
                arr.push_back({{"check", c.name},
                               {"status", c.skipped ? "skipped" : (c.ok ? "pass" : "fail")},
                               {"detail", c.detail}});
            }
            extra["checks"] = arr;
            extra["ok"] = all_ok();
            out << extra.dump(2) << "\n";
            return;
        }
        for (const auto &c : checks) {
            out << (c.skipped ? "SKIP" : (c.ok ? "PASS" : "FAIL")) << "  " << c.name;
            if (!c.detail.empty()) {
                out << ": " << c.detail;
            }
            out << "\n";
        }
        out << (all_ok() ? "all checks passed" : "MISMATCH") << "\n";
    }
};

std::vector<std::uint64_t> choose_primes(const Options &o, std::int64_t divisor, std::uint64_t offset) {
    if (o.prime != "auto") {
        std::uint64_t p = 0;
        try {
            p = std::stoull(o.prime);
        } catch (const std::exception &) {
            throw UsageError("--prime must be 'auto' or a prime number");
        }
        return {p};
    }
    // smallest two primes s >= 3 with divisor | s - offset
    std::vector<std::uint64_t> out;
    for (std::uint64_t s = 3; out.size() < 2; ++s) {
        if (s > offset && (s - offset) % static_cast<std::uint64_t>(divisor) == 0 && is_prime(s)) {
            out.push_back(s);
        }
        if (s > kDefaultPrimeSearchCap) {
            break;
        }
    }
    return out;
}

void verify_system(const Options &o, const RootSystemSpec &spec, Report &rep) {
    const std::string &m = o.method;
    const bool all = m == "all";
    if (!all && m != "bruteforce" && m != "genfun" && m != "graphs" && m != "finitefield") {
        throw UsageError("verify supports --method all, bruteforce, genfun, graphs or finitefield");
    }
    const bool classical = spec.lattice == LatticeKind::Classical;
    const VectorConfig cfg = build_config(spec);

    // Reference polynomial: brute force.
    const TuttePolynomial bf = classical ? classical_tutte_bruteforce(cfg) : arithmetic_tutte_bruteforce(cfg);
    auto same = [&](const std::string &name, const TuttePolynomial &t) {
        rep.add(name, t.poly == bf.poly && t.rank == bf.rank,
                t.poly == bf.poly ? t.poly.to_string()
                                  : "got " + t.poly.to_string() + ", brute force " + bf.poly.to_string());
    };
    if (all || m == "bruteforce") {
        const TuttePolynomial serial = classical ? reference::classical_tutte_bruteforce(cfg)
                                                 : reference::arithmetic_tutte_bruteforce(cfg);
        same("bruteforce parallel = serial reference", serial);
        const CoboundaryPolynomial psi = coboundary_from_tutte(bf);
        const MultiPoly at1 = substitute(psi.poly, {{"Y", MultiPoly::constant(coboundary_vars(), Rational(1))}},
                                         coboundary_vars());
        rep.add("psi(X,1) = X^r", at1 == MultiPoly::variable(coboundary_vars(), "X").pow(bf.rank),
                at1.to_string());
        rep.add("tutte -> coboundary -> tutte round trip",
                tutte_from_coboundary(psi, bf.ambient_rank, bf.flavor).poly == bf.poly);
    }
    if (all || m == "genfun") {
        same("genfun = bruteforce",
             extract_polynomial({spec.family, spec.lattice, std::max(o.order, spec.n)}, spec.n));
    }
    if (all || m == "graphs") {
        same("graph dictionary = bruteforce", graph_dictionary_tutte(spec.family, spec.n, spec.lattice));
    }
    if (all || m == "finitefield") {
        const CoboundaryPolynomial psi = coboundary_from_tutte(bf);
        if (classical) {
            const std::int64_t D = multiplicity_lcm(cfg);
            if (D != 1 && o.prime == "auto") {
                rep.skip("finite field (classical mode)",
                         "lcm of multiplicities is " + std::to_string(D) +
                             "; s-2 is odd for every odd prime s, so an even lcm never divides it");
            } else {
                for (auto s : choose_primes(o, D, 2)) {
                    rep.add("finite field classical mode at s=" + std::to_string(s),
                            verify_classical_mode(cfg, s, psi));
                }
            }
        } else {
            const std::int64_t D = admissibility_divisor(spec, cfg);
            for (auto p : choose_primes(o, D, 1)) {
                const TorusProfile prof = torus_profile(cfg, p, D);
                const MultiPoly predicted =
                    finite_field_prediction(psi, static_cast<unsigned>(cfg.lattice_rank()), p);
                rep.add("finite field identity at p=" + std::to_string(p),
                        prof.as_poly() == predicted, prof.as_poly().to_string());
            }
        }
    }
    for (const auto &f : printed_fixtures()) {
        if (f.kind == FixtureKind::Tutte && f.system == spec) {
            rep.add("printed value " + f.id, fixture_matches(f, bf.poly), f.citation);
        }
    }
}

void verify_signed_graphs(const Options &o, Report &rep) {
    const unsigned V = o.max_v;
    const auto census = master_census(V);
    const TruncSeries series = master_series(std::max(V, 1u));
    for (unsigned v = 0; v <= V; ++v) {
        rep.add("master census = formula at v=" + std::to_string(v),
                census[v] == egf_coefficient(series, v),
                std::to_string(census[v].num_terms()) + " coefficients");
    }
    const unsigned U = std::min(V + 2, kMaxUnsignedCensusVertices);
    const auto ucensus = unsigned_census(U);
    const TruncSeries useries = unsigned_series(std::max(U, 1u));
    for (unsigned v = 0; v <= U; ++v) {
        rep.add("unsigned census = F(z,1+y)^t at v=" + std::to_string(v),
                ucensus[v] == egf_coefficient(useries, v));
    }
    for (unsigned v = 0; v <= std::min(V, 4u); ++v) {
        const auto r = marked_graph_check(v);
        rep.add("marked graphs = 2^c balanced graphs at v=" + std::to_string(v),
                r.fibres_ok && r.counts_ok);
    }
}

int cmd_verify(const Options &o, std::ostream &out) {
    check_output(o);
    Report rep;
    Json extra = Json::object();
    if (o.signed_graphs) {
        if (o.max_v > kMaxSignedCensusVertices) {
            throw CapacityError("--max-v is limited to " + std::to_string(kMaxSignedCensusVertices));
        }
        extra["signed_graphs_max_v"] = o.max_v;
        verify_signed_graphs(o, rep);
    }
    if (!o.system.empty() || !o.signed_graphs) {
        const RootSystemSpec spec = parse_system(o);
        extra["system"] = spec.to_string();
        extra["method"] = o.method;
        verify_system(o, spec, rep);
    }
    rep.print(out, o.output, extra);
    return rep.all_ok() ? kOk : kMismatch;
}

// ---- table -----------------------------------------------------------------

std::vector<std::string> split_list(const std::string &s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

int cmd_table(const Options &o, std::ostream &out) {
    check_output(o);
    LatticeKind lattice;
    try {
        lattice = parse_lattice(o.lattice);
    } catch (const PreconditionError &e) {
        throw UsageError(e.what());
    }
    bool want_tutte = false, want_char = false, want_ehrhart = false;
    for (const auto &r : split_list(o.report)) {
        if (r == "tutte") {
            want_tutte = true;
        } else if (r == "char" || r == "characteristic") {
            want_char = true;
        } else if (r == "ehrhart") {
            want_ehrhart = true;
        } else {
            throw UsageError("--report takes a list of tutte, char, ehrhart");
        }
    }
    if ((want_char || want_ehrhart) && lattice == LatticeKind::Classical) {
        throw UsageError("characteristic and Ehrhart reports need an arithmetic lattice");
    }
    if (o.max_n < 2) {
        throw UsageError("--max-n must be at least 2");
    }
    const unsigned order = std::max(o.order > 0 ? o.order : kDefaultGenfunOrder, o.max_n);
    Json rows = Json::array();
    for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
        const GenFunRequest req{f, lattice, order};
        const TruncSeries s = expand_genfun(req);
        for (unsigned n = 2; n <= o.max_n; ++n) {
            const RootSystemSpec spec{f, n, lattice};
            const TuttePolynomial t = extract_polynomial(req, s, n);
            Json row{{"row", row_name(spec)}, {"system", spec.to_string()}};
            if (want_tutte) {
                row["tutte"] = t.poly.to_string();
            }
            if (want_char || want_ehrhart) {
                const InvariantReport r = derive_all(t);
                if (want_char) {
                    row["characteristic"] = r.characteristic.to_string();
                }
                if (want_ehrhart) {
                    row["ehrhart"] = r.ehrhart.to_string();
                }
            }
            rows.push_back(row);
        }
    }
    if (o.output == "json") {
        out << Json{{"lattice", lattice_name(lattice)}, {"rows", rows}}.dump(2) << "\n";
        return kOk;
    }
    for (const auto &row : rows) {
        out << row["row"].get<std::string>();
        for (const char *k : {"tutte", "characteristic", "ehrhart"}) {
            if (row.contains(k)) {
                out << " | " << row[k].get<std::string>();
            }
        }
        out << "\n";
    }
    return kOk;
}

// ---- invariants / fixtures -------------------------------------------------

int cmd_invariants(const Options &o, std::ostream &out) {
    check_output(o);
    const RootSystemSpec spec = parse_system(o);
    if (spec.lattice == LatticeKind::Classical) {
        throw UsageError("invariants need an arithmetic lattice");
    }
    const TuttePolynomial t = compute_with(spec, o.method, o.order);
    const InvariantReport r = derive_all(t);
    if (o.output == "json") {
        Json j{{"system", spec.to_string()}, {"tutte", t.poly.to_string()}, {"invariants", invariants_to_json(r)}};
        out << j.dump(2) << "\n";
    } else {
        out << "system: " << spec.to_string() << "\n"
            << "tutte: " << t.poly << "\n"
            << "characteristic: " << r.characteristic << "\n"
            << "ehrhart: " << r.ehrhart << "\n"
            << "poincare: " << r.poincare << "\n"
            << "volume: " << r.volume << "\n"
            << "lattice points: " << r.lattice_points << "\n"
            << "interior points: " << r.interior_points << "\n"
            << "toric regions: " << r.toric_regions << "\n"
            << "DM dimension: " << r.dm_dim << "\n"
            << "DPV dimension: " << r.dpv_dim << "\n";
    }
    return kOk;
}

int cmd_fixtures(const Options &o, std::ostream &out) {
    check_output(o);
    Json arr = Json::array();
    for (const auto &f : printed_fixtures()) {
        Json j{{"id", f.id},
               {"kind", fixture_kind_name(f.kind)},
               {"system", f.system.to_string()},
               {"printed", f.printed},
               {"value", f.poly.to_string()},
               {"partial", f.partial},
               {"citation", f.citation}};
        if (!f.note.empty()) {
            j["note"] = f.note;
        }
        arr.push_back(j);
    }
    if (o.output == "json") {
        out << arr.dump(2) << "\n";
        return kOk;
    }
    for (const auto &j : arr) {
        out << j["id"].get<std::string>() << " [" << j["system"].get<std::string>() << "]\n"
            << "  printed:  " << j["printed"].get<std::string>() << "\n"
            << "  value:    " << j["value"].get<std::string>() << "\n"
            << "  citation: " << j["citation"].get<std::string>() << "\n";
        if (j.contains("note")) {
            out << "  note:     " << j["note"].get<std::string>() << "\n";
        }
    }
    return kOk;
}

void apply_threads(const Options &o) {
    int threads = o.threads;
    if (threads <= 0) {
        if (const char *env = std::getenv("TUTTEKIT_THREADS")) {
            threads = std::atoi(env);
        }
    }
    if (threads > 0) {
        omp_set_num_threads(threads);
    }
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Arithmetic Tutte polynomials of classical root systems", "tuttekit"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--output,--out", o.output, "text or json");
        sub->add_option("--threads", o.threads, "worker threads (default: TUTTEKIT_THREADS or all)");
    };
    auto add_system = [&](CLI::App *sub) {
        sub->add_option("--system", o.system, "family:n:lattice, e.g. C:2:integer");
        sub->add_flag("--type-a-rank", o.type_a_rank, "read n in A:n:... as the rank instead of the coordinate count");
        sub->add_option("--order", o.order, "generating function truncation order");
    };

    CLI::App *compute = app.add_subcommand("compute", "compute an arithmetic or classical Tutte polynomial");
    add_system(compute);
    add_common(compute);
    compute->add_option("--method", o.method, "bruteforce, genfun or graphs");

    CLI::App *verify = app.add_subcommand("verify", "cross-check the computation paths");
    add_system(verify);
    add_common(verify);
    verify->add_option("--method", o.method, "all, bruteforce, genfun, graphs or finitefield");
    verify->add_option("--prime", o.prime, "auto or an admissible prime");
    verify->add_flag("--signed-graphs", o.signed_graphs, "check the signed graph enumeration theorems");
    verify->add_option("--max-v", o.max_v, "vertex bound for --signed-graphs");

    CLI::App *table = app.add_subcommand("table", "tabulate polynomials for A2.., B2.., C2.., D2..");
    add_common(table);
    table->add_option("--lattice", o.lattice, "integer, root, weight or classical");
    table->add_option("--max-n", o.max_n, "largest row index");
    table->add_option("--report", o.report, "comma list of tutte, char, ehrhart");
    table->add_option("--order", o.order, "generating function truncation order");

    CLI::App *invariants = app.add_subcommand("invariants", "derived invariants of M");
    add_system(invariants);
    add_common(invariants);
    invariants->add_option("--method", o.method, "bruteforce, genfun or graphs");

    CLI::App *fixtures = app.add_subcommand("fixtures", "dump the embedded printed values with citations");
    add_common(fixtures);

    std::vector<const char *> argv{"tuttekit"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }
    if (invariants->parsed() && o.output == "text" && !invariants->count("--output")) {
        o.output = "json";
    }

    try {
        apply_threads(o);
        if (compute->parsed()) {
            return cmd_compute(o, out);
        }
        if (verify->parsed()) {
            return cmd_verify(o, out);
        }
        if (table->parsed()) {
            return cmd_table(o, out);
        }
        if (invariants->parsed()) {
            return cmd_invariants(o, out);
        }
        return cmd_fixtures(o, out);
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const CapacityError &e) {
        err << "capacity: " << e.what() << "\n";
        return kCapacity;
    } catch (const UnsupportedError &e) {
        err << "unsupported: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kFailure;
    }
}

} // namespace tuttekit::cli
