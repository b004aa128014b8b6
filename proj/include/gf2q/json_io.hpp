// JSON views of the library's results, as emitted by `gf2q --json`.

#pragma once

#include <vector>

#include <json.hpp>

#include "gf2q/berlekamp.hpp"
#include "gf2q/irreducible.hpp"
#include "gf2q/linalg.hpp"
#include "gf2q/properties.hpp"

namespace gf2q {

/// {"input": hex, "factors": [{"poly", "text", "multiplicity"}...], "order": int|null}
nlohmann::ordered_json factorization_json(const Poly& input, const Factorization& fac);

/// Array of row bit-strings, column 0 first.
nlohmann::ordered_json matrix_json(const BitMatrix& m);

/// {"property", "m", "holds", "method", "witness": {"parts": [...]}|null, "witness_poly": hex|null}
nlohmann::ordered_json verdict_json(const PropertyVerdict& v);

nlohmann::ordered_json poly_list_json(const std::vector<Poly>& polys);

/// {"degree": l, "count": "<decimal>"}; the count is a string since it can
/// exceed any fixed-width JSON number.
nlohmann::ordered_json count_json(const IrreducibleCount& c);

}  // namespace gf2q
