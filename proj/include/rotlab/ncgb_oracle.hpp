#pragma once

#include "rotlab/free_poly.hpp"

#include <vector>

namespace rotlab {

/// Exhaustive linear algebra over the finite-dimensional space of
/// two-sided combinations a * gen * b of total degree <= bound: decides
/// whether q lies in their span. For homogeneous generator sets the span
/// equals the ideal truncated at the bound, so this is an exact
/// membership oracle there; it is independent of the Groebner path.
bool oracle_in_span(const FreePoly& q, const std::vector<FreePoly>& generators, int bound);

} // namespace rotlab
