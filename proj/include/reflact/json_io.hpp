#pragma once

#include "reflact/arrangement.hpp"
#include "reflact/cyclotomic.hpp"
#include "reflact/invariants.hpp"
#include "reflact/linalg.hpp"

#include "json.hpp"

namespace reflact {

using json = nlohmann::json;

/// {"m": m, "c": ["a/b", ...]}. A bare string or integer is read as a rational.
json cyc_to_json(const Cyc& x);
Cyc cyc_from_json(const json& j);

json matrix_to_json(const CycMatrix& m);
CycMatrix matrix_from_json(const json& j);

Covector covector_from_json(const json& j);

json arrangement_to_json(const Arrangement& a);
Arrangement arrangement_from_json(const json& j);

json flat_to_json(const Flat& f);

/// {"k": k, "terms": [{"nbc": [i1, ..., ik], "coeff": "a/b"}, ...]}, terms in
/// NBC order. Reading back maps each tuple through the algebra's NBC index.
json os_element_to_json(const OSAlgebra& os, const OSElement& x);
OSElement os_element_from_json(const OSAlgebra& os, const json& j);

/// {"method", "poincare": [...], "orbits": [{"orbit", "codim", "rep_key", "dim", "type"}]}
json invariant_report_to_json(const InvariantReport& r);
InvariantReport invariant_report_from_json(const json& j);

}  // namespace reflact
