#pragma once

#include <json.hpp>

#include "waring/decomposition.hpp"

namespace waring {

// Rationals serialize as canonical "p/q" strings (plain "p" when q = 1),
// complex scalars as round-trippable decimal strings with the decomposition's
// recorded precision; no value ever passes through a machine float.

nlohmann::json decomposition_to_json(const WaringDecomposition& dec);
WaringDecomposition decomposition_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const LowerBoundCertificate& cert);
LowerBoundCertificate certificate_from_json(const nlohmann::json& j);

nlohmann::json rank_to_json(const RankResult& res);

}  // namespace waring
