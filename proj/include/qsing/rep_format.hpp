#pragma once

#include <string>

#include <json.hpp>

#include "qsing/monomial.hpp"

// Representation files:
//
//   {"dimension": N, "root_order": m,
//    "generators": [{"perm": [1-based images], "exponents": [k_1, ..., k_N]}, ...]}
//
// The canonical form is rep_to_json(...).dump(): keys sorted, no whitespace,
// exponents reduced mod m. docs/rep-format.md has the full description.
namespace qsing {

/// Throws InvalidInput on missing fields, wrong types, or invalid generators.
MonomialRep rep_from_json(const nlohmann::json &j);
MonomialRep parse_rep(const std::string &text);

nlohmann::json rep_to_json(const MonomialRep &rep);
std::string canonical_rep_json(const MonomialRep &rep);

/// {"perm": [1-based], "exponents": [...]}
nlohmann::json element_to_json(const MonomialElement &g);

} // namespace qsing
