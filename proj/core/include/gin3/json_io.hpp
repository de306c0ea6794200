#pragma once

#include <json.hpp>

#include "gin3/oracle.hpp"
#include "gin3/verify.hpp"

namespace gin3 {

using json = nlohmann::json;

json to_json(const Monomial& m);
Monomial monomial_from_json(const json& j);

/// {"generators": [[a,b,c], ...]} sorted by degree ascending, then revlex
/// descending.
json to_json(const MonomialIdeal& J);
/// Accepts any object with a "generators" array (so a saved GinResult
/// round-trips), or a bare array of exponent triples.
MonomialIdeal ideal_from_json(const json& j);

/// {"degrees": [d1,d2,d3], "H": [...], "J_counts": [...]}.
json hilbert_to_json(const DegreeTriple& degrees);

json to_json(const GinResult& result);
json to_json(const OracleVerdict& verdict);
json to_json(const VerifyReport& report);
json to_json(const MapRankReport& report);
json to_json(const SweepReport& report);

}  // namespace gin3
