#pragma once

#include <json.hpp>

#include "qseries.hpp"

namespace sumsq {

// {"order_quarter": N, "coeffs": [{"e": e, "v": "num/den"}, ...]}, nonzero terms only.
nlohmann::json qx_to_json(const QX& a);
QX qx_from_json(const nlohmann::json& j);

}  // namespace sumsq
