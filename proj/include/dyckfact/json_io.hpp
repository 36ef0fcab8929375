#pragma once

#include <json.hpp>

#include "dyckfact/factor.hpp"

namespace dyckfact {

/// JSON conventions used on every CLI surface:
///   rational       "a/b" or "a"
///   word           "21211"
///   polynomial     {"roots": [...]} out; {"roots"} or {"coeffs"} in
///   pair           {"p1": ..., "p2": ...}
///   dyck path      {"word": "..."}
///   cylindrical    {"word": "...", "base": [k, l]}
///   factorization  {"cosets": [{"representative": ..., "factors":
///                   [{"word": ..., "lambda": ...}, ...]}, ...]}
using Json = nlohmann::ordered_json;

Json to_json(const Rat& r);
Json to_json(const MonicPoly& p);
Json to_json(const SolutionPair& s);
Json to_json(const DyckPath& d);
Json to_json(const CylPath& c);
Json to_json(const FundamentalSolution& f);
Json to_json(const Factorization& f);

Rat rat_from_json(const Json& j);
Word word_from_json(const Json& j);
MonicPoly poly_from_json(const Json& j);
SolutionPair pair_from_json(const Json& j);
CylPath cyl_from_json(const Json& j);
Factorization factorization_from_json(const Json& j);

/// Parses a JSON document, converting syntax errors to parse_error.
Json parse_json(const std::string& text);

} // namespace dyckfact
