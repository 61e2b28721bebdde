#pragma once

#include <json.hpp>

#include "tuttekit/finite_field.hpp"
#include "tuttekit/invariants.hpp"
#include "tuttekit/lattice.hpp"
#include "tuttekit/multipoly.hpp"
#include "tuttekit/tutte.hpp"

namespace tuttekit {

using Json = nlohmann::ordered_json;

/// {"vars":[...],"terms":[{"coeff":"3","exps":[0,0]},...]} in graded-lex
/// order. Unless `allow_rational`, every coefficient must be an integer.
Json poly_to_json(const MultiPoly &p, bool allow_rational = false);
MultiPoly poly_from_json(const Json &j);

/// Columns as arrays of "p/q" strings.
Json vectors_to_json(const std::vector<RatVector> &columns);
Json lattice_to_json(const LatticeBasis &lattice);

Json tutte_to_json(const TuttePolynomial &t);
Json coboundary_to_json(const CoboundaryPolynomial &c);
Json invariants_to_json(const InvariantReport &r);
Json profile_to_json(const TorusProfile &p);

} // namespace tuttekit
