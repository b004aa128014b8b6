#include "gf2q/json_io.hpp"

namespace gf2q {

using json = nlohmann::ordered_json;

json factorization_json(const Poly& input, const Factorization& fac) {
    json factors = json::array();
    for (const auto& [poly, mult] : fac.factors) {
        factors.push_back({{"poly", to_hex(poly)}, {"text", format(poly)}, {"multiplicity", mult}});
    }
    json out = {{"input", to_hex(input)}, {"factors", std::move(factors)}, {"order", nullptr}};
    if (auto order = order_of(fac)) out["order"] = order->value;
    return out;
}

json matrix_json(const BitMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) rows.push_back(m.row_string(i));
    return rows;
}

json verdict_json(const PropertyVerdict& v) {
    json out = {
        {"property", to_string(v.property)},
        {"m", v.m},
        {"holds", v.holds},
        {"method", to_string(v.method)},
        {"witness", nullptr},
        {"witness_poly", nullptr},
    };
    if (v.witness) {
        json parts = json::array();
        for (const auto& p : v.witness->parts) parts.push_back({{"degree", p.degree}, {"count", p.count}});
        out["witness"] = {{"parts", std::move(parts)}};
    }
    if (v.witness_poly) out["witness_poly"] = to_hex(*v.witness_poly);
    return out;
}

json poly_list_json(const std::vector<Poly>& polys) {
    json out = json::array();
    for (const auto& p : polys) out.push_back(to_hex(p));
    return out;
}

json count_json(const IrreducibleCount& c) { return {{"degree", c.degree}, {"count", c.count.str()}}; }

}  // namespace gf2q
