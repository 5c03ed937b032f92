#pragma once

#include "coxnorm/fixture.hpp"
#include "coxnorm/normalizer.hpp"

#include <string>
#include <vector>

namespace coxnorm {

// Groups above this order are not enumerated; the affected checks are reported as skipped.
constexpr std::size_t kEnumerationLimit = 2'000'000;

// Closure-operator laws on every standard parabolic, concept consistency, and agreement with the
// commutation-based oracle when W is small enough.
CheckReport suite_galois(const ShapeCatalog& cat);
// Howlett's lemma for every standard parabolic, and the stabilizer normalizer against the oracle.
CheckReport suite_howlett(const ShapeCatalog& cat);
// Goursat sections of N along X-perp + X and of D along Y-perp + (X cap Y), plus the order and
// normality statements of the decomposition.
CheckReport suite_goursat(const ShapeCatalog& cat, const std::vector<Decomposition>& decs);
// Observations on closures and involution centralizers.
CheckReport suite_observations(const ShapeCatalog& cat, const std::vector<Decomposition>& decs);
CheckReport suite_fixtures(const ShapeCatalog& cat, const std::vector<TableRow>& rows);

const std::vector<std::string>& suite_names();
// Suites that need the decomposition of every shape.
bool suite_needs_table(const std::string& suite);

} // namespace coxnorm
