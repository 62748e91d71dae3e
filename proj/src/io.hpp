#pragma once

#include <string>

#include "json.hpp"
#include "equivariant.hpp"

namespace omc {

using Json = nlohmann::ordered_json;

/// Entries may be integers or rational strings; floats are rejected.
Rational rational_from_json(const Json& j);
RatMatrix matrix_from_json(const Json& j);
/// Comma separated rows; blank lines and lines starting with '#' ignored.
RatMatrix matrix_from_csv(const std::string& text);
/// {"nodes": n, "edges": [[t, h], ...]} with 1-based endpoints.
Digraph digraph_from_json(const Json& j);
/// {"dim": d, "vertices": [[...], ...]}.
VPolytope polytope_from_json(const Json& j);

/// Parses text, mapping library exceptions to ParseError.
Json parse_json(const std::string& text);

Json to_json(const Rational& r);
Json to_json(const RatVector& v);
Json to_json(const RatMatrix& m);
Json to_json(const Digraph& g);
Json to_json(const VPolytope& p);
Json to_json(const LinearConstraint& c);
Json to_json(const HRep& h);
Json to_json(const CircuitSet& c);
/// Coefficients low degree first, as decimal strings.
Json to_json(const IntPolynomial& p);
Json to_json(const RatPolynomial& p);
Json to_json(const FaceLabel& l);
Json to_json(const std::vector<std::size_t>& v);
Json to_json(const AxiomReport& r);

}  // namespace omc
