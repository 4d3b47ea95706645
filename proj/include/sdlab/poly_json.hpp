#pragma once

#include "sdlab/bi_laurent.hpp"
#include "sdlab/laurent_poly.hpp"

#include <json.hpp>

namespace sdlab {

// {"terms": [[exp, "num/den"], ...]} with exponents ascending.
nlohmann::json to_json(const LaurentPoly& f);
// {"terms": [[eq, et, "num/den"], ...]} ascending in (eq, et).
nlohmann::json to_json(const BiLaurent& f);

LaurentPoly laurent_from_json(const nlohmann::json& j);
BiLaurent bi_laurent_from_json(const nlohmann::json& j);

} // namespace sdlab
