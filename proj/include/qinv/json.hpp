#ifndef QINV_JSON_HPP
#define QINV_JSON_HPP

#include <json.hpp>

#include "qinv/poly.hpp"

namespace qinv {

/// [{"coeff": "3", "ex": 2, "ey": 1, "ez": 1, "ep": 0, "eq": 0}, ...] in
/// canonical term order. Coefficients are decimal strings.
nlohmann::json to_json(const MultiPoly& a);
MultiPoly multipoly_from_json(const nlohmann::json& j);

/// [{"coeff": "1", "eq": -2}, ...] by descending exponent.
nlohmann::json to_json(const QLaurent& a);
QLaurent qlaurent_from_json(const nlohmann::json& j);

}  // namespace qinv

#endif  // QINV_JSON_HPP
