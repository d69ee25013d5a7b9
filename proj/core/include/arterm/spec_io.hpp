#pragma once

// JSON wire formats for recurrences, synthesis results and fixtures.
//   {"order": 2, "coeffs": ["-1", "-1"], "init": ["0", "1"]}
// Numbers are decimal strings; coefficients may be "p/q". Plain JSON
// integers are accepted on input.

#include "arterm/catalog.hpp"
#include "arterm/recurrence.hpp"
#include "arterm/synthesis.hpp"

#include <nlohmann/json.hpp>

#include <string_view>

namespace arterm {

/// Throws ParseError (position 0) on malformed JSON and DomainError when the
/// fields do not describe a valid recurrence.
Recurrence recurrence_from_json(const nlohmann::json& j);
Recurrence recurrence_from_json_text(std::string_view text);
nlohmann::json to_json(const Recurrence& rec);

nlohmann::json to_json(const BoundsCertificate& cert);
nlohmann::json to_json(const SynthesisResult& result);
nlohmann::json to_json(const Fixture& f);

}  // namespace arterm
