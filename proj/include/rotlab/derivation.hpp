#pragma once

#include "rotlab/free_poly.hpp"

#include <map>

namespace rotlab {

/// A derivation given by its images on generators; the extension to the
/// whole algebra obeys Leibniz's law exactly.
struct Derivation {
    AlphabetPtr alphabet;
    std::map<Gen, FreePoly> images;
};

/// d(p), linear in p, Leibniz on products. Errors if p uses a generator
/// without an image.
FreePoly derive(const Derivation& d, const FreePoly& p);

/// The derivation w -> [a, w]; its extension agrees with z -> [a, z].
Derivation make_inner_derivation(const FreePoly& a);

} // namespace rotlab
