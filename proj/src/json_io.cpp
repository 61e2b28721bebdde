#include "tuttekit/json_io.hpp"

#include "tuttekit/errors.hpp"

namespace tuttekit {

Json poly_to_json(const MultiPoly &p, bool allow_rational) {
    Json terms = Json::array();
    for (const auto &[exps, c] : p.terms()) {
        if (!allow_rational && !c.is_integer()) {
            throw StructuralError("non-integer coefficient " + c.to_string() +
                                  " in a polynomial emitted as integral");
        }
        terms.push_back({{"coeff", c.to_string()}, {"exps", exps}});
    }
    return {{"vars", p.vars()}, {"terms", terms}};
}

MultiPoly poly_from_json(const Json &j) {
    try {
        const auto vars = j.at("vars").get<std::vector<std::string>>();
        MultiPoly out(vars);
        for (const auto &t : j.at("terms")) {
            const auto exps = t.at("exps").get<Exponents>();
            if (exps.size() != vars.size()) {
                throw StructuralError("exponent vector length differs from the variable count");
            }
            out += MultiPoly::monomial(vars, exps, Rational::parse(t.at("coeff").get<std::string>()));
        }
        return out;
    } catch (const nlohmann::json::exception &e) {
        throw StructuralError(std::string("malformed polynomial JSON: ") + e.what());
    }
}

Json vectors_to_json(const std::vector<RatVector> &columns) {
    Json out = Json::array();
    for (const auto &col : columns) {
        Json c = Json::array();
        for (const auto &x : col) {
            c.push_back(x.to_string());
        }
        out.push_back(c);
    }
    return out;
}

Json lattice_to_json(const LatticeBasis &lattice) {
    return {{"ambient_dim", lattice.ambient_dim()},
            {"rank", lattice.rank()},
            {"basis_columns", vectors_to_json(lattice.columns())}};
}

Json tutte_to_json(const TuttePolynomial &t) {
    return {{"flavor", t.flavor == Flavor::Arithmetic ? "arithmetic" : "classical"},
            {"rank", t.rank},
            {"ambient_rank", t.ambient_rank},
            {"text", t.poly.to_string()},
            {"poly", poly_to_json(t.poly)}};
}

Json coboundary_to_json(const CoboundaryPolynomial &c) {
    return {{"rank", c.rank}, {"text", c.poly.to_string()}, {"poly", poly_to_json(c.poly)}};
}

Json invariants_to_json(const InvariantReport &r) {
    return {{"rank", r.rank},
            {"lattice_rank", r.lattice_rank},
            {"characteristic", r.characteristic.to_string()},
            {"ehrhart", r.ehrhart.to_string()},
            {"poincare", r.poincare.to_string()},
            {"volume", r.volume.get_str()},
            {"lattice_points", r.lattice_points.get_str()},
            {"interior_points", r.interior_points.get_str()},
            {"toric_regions", r.toric_regions.get_str()},
            {"dm_dim", r.dm_dim.get_str()},
            {"dpv_dim", r.dpv_dim.get_str()},
            {"characteristic_poly", poly_to_json(r.characteristic)},
            {"ehrhart_poly", poly_to_json(r.ehrhart)},
            {"poincare_poly", poly_to_json(r.poincare)}};
}

Json profile_to_json(const TorusProfile &p) {
    Json hist = Json::object();
    for (std::size_t h = 0; h < p.histogram.size(); ++h) {
        if (p.histogram[h] != 0) {
            hist[std::to_string(h)] = p.histogram[h];
        }
    }
    return {{"prime", p.prime},
            {"q", p.prime - 1},
            {"lattice_rank", p.rank},
            {"points", p.total().get_str()},
            {"histogram", hist},
            {"sum", p.as_poly().to_string()}};
}

} // namespace tuttekit
