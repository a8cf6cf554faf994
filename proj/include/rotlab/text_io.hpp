#pragma once

#include "rotlab/central_poly.hpp"

#include <string>

namespace rotlab {

/// Canonical text form (see FreePoly::str / CentralPoly::str):
///   free poly:    "u1.v1 - v1.u1", "2 * u1 + 1/3 * v2.v2", "1", "0"
///   central poly: "x^1 y^0 * (u1) + x^1 y^1 * (u1.v1)", "0"
/// The parsers accept exactly this grammar (whitespace-insensitive) and
/// round-trip with the printers.
FreePoly parse_free_poly(const std::string& text, const AlphabetPtr& alphabet);
CentralPoly parse_central_poly(const std::string& text, const AlphabetPtr& alphabet, int bound);

} // namespace rotlab
