#pragma once

#include <nlohmann/json.hpp>

#include "cyclicsum/multi_index.hpp"
#include "cyclicsum/numeric.hpp"
#include "cyclicsum/poly.hpp"

namespace csf {

/// [{"word": "xyy", "num": "1", "den": "2"}, ...] in canonical term order; the unit word is "".
nlohmann::json poly_to_json(const Poly& p);
/// Inverse of poly_to_json. Throws std::invalid_argument on malformed input.
Poly poly_from_json(const nlohmann::json& j);

nlohmann::json index_to_json(const MultiIndex& k);

/// {"index", "residual", "err", "tol", "N", "pass"}.
nlohmann::json report_to_json(const CsfReport& r);
/// {"index", "lhs", "rhs", "residual", "tol", "N", "pass"}.
nlohmann::json report_to_json(const MzsvCsfReport& r);

} // namespace csf
