#pragma once

#include "ddpoly/chains.hpp"
#include "ddpoly/kaehler.hpp"

#include <json.hpp>

#include <string>

namespace ddpoly {

using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits render as JSON numbers, larger ones as
// decimal strings.
Json integer_to_json(const Integer& n);

Json poly_to_json(const NumericalPolynomial& p);
Json multipoly_to_json(const MultiNumericalPolynomial& p);
Json report_to_json(const DimensionReport& rep);

std::string report_to_text(const DimensionReport& rep, const std::string& indent);

// FNV-1a 64-bit digest, hex
std::string content_digest(const std::string& bytes);

}  // namespace ddpoly
