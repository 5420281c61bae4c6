#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "ambiskew/hopf.hpp"
#include "ambiskew/reps.hpp"

namespace ambiskew {

using Json = nlohmann::ordered_json;

// Expression grammar, loosest binding first:
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*
//   unary := '-' unary | power
//   power := atom ('^' '-'? integer)?
//   atom  := integer | identifier | '(' expr ')'
// Identifiers are generator names of the ring, then parameter names of the
// field. Errors are ParseError with line and column.
RingElement parse_ring_expr(const Ring& ring, std::string_view text);
Scalar parse_scalar(const Field& field, std::string_view text);

// SpecDocument:
// {"name", "field": {"parameters": [{"name", "kind", "order"?}]},
//  "generators": [{"name", "kind", "sigma"}],
//  "xi", "h", "r_plus", "r_minus", "l_plus", "l_minus"}
// Schema errors are ParseError prefixed by a JSON path such as "$.h".
Algebra parse_spec(std::string_view text);
Algebra spec_from_json(const Json& doc);
Json spec_to_json(const AlgebraSpec& a);

// {"K": "q^3"}; every generator must be present.
Weight weight_from_json(const Ring& ring, const Json& w);
Json weight_to_json(const Weight& w);

Json dimension_to_json(const Dimension& d);
Json class_case_to_json(const ClassCase& c);
Json classification_to_json(const Classification& c);
// Compact answer of `dim`: {"dim", "branch", "j"?}.
Json dim_summary_to_json(const Classification& c);
Json simple_to_json(const SimpleDescriptor& d);
Json hopf_report_to_json(const AlgebraSpec& a, const HopfReport& r);
Json cg_to_json(const CGDecomposition& cg);
Json summands_to_json(const std::vector<Summand>& s);

// {"blocks": [{"weight", "dim"}], "xplus": rows, "xminus": rows}; rows of
// expression strings.
Json module_to_json(const WeightModule& v);
WeightModule module_from_json(const Algebra& a, const Json& doc);

std::string dump(const Json& j);

} // namespace ambiskew
