#pragma once

#include <string>

#include <json.hpp>

#include "superflow/golden.hpp"
#include "superflow/group.hpp"
#include "superflow/multipoly.hpp"
#include "superflow/ratvf.hpp"

namespace superflow {

using Json = nlohmann::ordered_json;

/// [a_num, a_den, b_num, b_den] for a + b sqrt5; integers beyond 64 bits
/// are written as decimal strings.
Json to_json(const Golden& x);
Golden golden_from_json(const Json& j);

/// Power-basis coordinates as [num, den] pairs plus the field order.
Json to_json(const Cyclotomic& x);

/// {"vars": [...], "terms": [[exponents..., a_num, a_den, b_num, b_den], ...]}
Json to_json(const MultiPoly<Golden>& p);
MultiPoly<Golden> poly_from_json(const Json& j);

/// {"vars": [...], "field_order": N, "terms": [[exponents..., [[num, den], ...]], ...]}
Json to_json(const MultiPoly<Cyclotomic>& p);

/// {"vars", "numerators": [terms...], "denominator": terms}
Json to_json(const RationalVF<Golden>& v);
RationalVF<Golden> field_from_json(const Json& j);
Json to_json(const RationalVF<Cyclotomic>& v);

/// {"tag", "order", "dim", "elements": [[row-major entries], ...]}
template <class S>
Json to_json(const MatrixGroup<S>& g);

Json matrix_to_json(const ExactMatrix<Golden>& m);
Json matrix_to_json(const ExactMatrix<Cyclotomic>& m);

/// Serializes with floats printed as %.17g, so identical values give
/// byte-identical text.
std::string dump_json(const Json& j, int indent = 2);

/// Parses exact golden expressions: integers, decimals, phi, sqrt5, + - * / ^
/// and parentheses, e.g. "-phi^3/6" or "1/20".
Golden parse_golden(const std::string& text);

extern template Json to_json(const MatrixGroup<Golden>&);
extern template Json to_json(const MatrixGroup<Cyclotomic>&);

}  // namespace superflow
