#pragma once

// Text and structured (JSON) forms.
//
// Text polynomial: descending degree, `x^4 + 3*x^2 + 1`, `-x^2 + 2*x - 1`,
// `0` for the zero polynomial.
// Structured polynomial: JSON array of decimal strings, ascending degree.
// Structured certificate:
//   { "kind": "FIB_POWER" | "LUCAS_POWER" | "PRODUCT", "n": N,
//     "exponent": E  (power kinds) | "shift": D  (PRODUCT),
//     "n_parity": 0|1, "denom_exponent": d,
//     "terms": [ { "kind": "FIB"|"LUCAS"|"CONST", "subscript": S,
//                  "multiplier": "<decimal>" }, ... ] }

#include "fibpoly/linearizer.hpp"
#include "fibpoly/polycore.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

namespace fibpoly {

std::string to_text(const Polynomial& p);

/// Parses a decimal integer (optional leading '-', no '+' or whitespace).
Coefficient parse_coefficient(std::string_view s);

nlohmann::json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Linearization& cert);
Linearization linearization_from_json(const nlohmann::json& j);

nlohmann::json to_json(const VerificationReport& r);

/// Human-readable certificate listing, one term per line with its symbolic
/// multiplier.
std::string to_text(const Linearization& cert);

} // namespace fibpoly
