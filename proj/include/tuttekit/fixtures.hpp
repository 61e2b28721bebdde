#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tuttekit/multipoly.hpp"
#include "tuttekit/root_systems.hpp"

namespace tuttekit {

/// Parses polynomials as printed in tables: "3+4 x+x^2+4 y+2 y^2",
/// "7830y^3", "y^{17}", "x ^2+ 2y^2", "1 + 2*x". Juxtaposition and '*'
/// both mean multiplication; variable names are matched against `vars`.
MultiPoly parse_polynomial(std::string_view text, const std::vector<std::string> &vars);

enum class FixtureKind { Tutte, Characteristic, Ehrhart };

std::string fixture_kind_name(FixtureKind k);

/// A value copied from the source tables, kept verbatim alongside its parse.
struct PrintedFixture {
    std::string id;
    FixtureKind kind = FixtureKind::Tutte;
    RootSystemSpec system;     // type A: n = coordinate count
    std::string printed;       // verbatim text
    MultiPoly poly;            // the value to check
    bool partial = false;      // only the listed terms are checked
    std::string citation;
    std::string note;
};

const std::vector<PrintedFixture> &printed_fixtures();

/// The fixture with the given id (throws PreconditionError if unknown).
const PrintedFixture &printed_fixture(std::string_view id);

/// Exact comparison; for partial fixtures every listed term must match.
bool fixture_matches(const PrintedFixture &f, const MultiPoly &computed);

} // namespace tuttekit
