#pragma once

#include <nlohmann/json.hpp>

#include "hcross/besov.hpp"
#include "hcross/majorant.hpp"

namespace hcross {

// JSON forms: {"d": 2, "r": 1.5, "b": [0.5, 0.25], "l": 2} and
// {"p": 2, "theta": "inf"}. Infinite exponents are written as the string "inf".

void to_json(nlohmann::json& j, const MajorantParams& m);
/// Throws ConfigError on missing or mistyped keys and on invariant violations.
void from_json(const nlohmann::json& j, MajorantParams& m);

void to_json(nlohmann::json& j, const BesovParams& bp);
void from_json(const nlohmann::json& j, BesovParams& bp);

/// A number, or one of "inf" / "infinity".
double exponent_from_json(const nlohmann::json& j, const char* key);
nlohmann::json exponent_to_json(double value);

}  // namespace hcross
