#pragma once

#include "rotlab/free_poly.hpp"

namespace rotlab {

/// A formal inverse adjoined to a generator: the rewriting rules
/// base.inverse -> 1 and inverse.base -> 1.
struct InversePair {
    Gen base;
    Gen inverse;
};

/// The pairs declared by an alphabet (every generator whose inverse
/// symbol is also present).
std::vector<InversePair> inverse_pairs_of(const Alphabet& alphabet);

/// Unique normal form of a word under inverse cancellation. Linear time.
Word inverse_normal_form(const Word& w, const Alphabet& alphabet);

/// Extension to polynomials: rewrite every word, recombine. Idempotent.
FreePoly inverse_normal_form(const FreePoly& p);

/// Critical-pair analysis of the cancellation rules for this alphabet:
/// every overlap of two rule left-hand sides reduces to the same normal
/// form both ways. (Overlaps have the shape b.B.b or B.b.B.)
bool inverse_rules_confluent(const Alphabet& alphabet);

} // namespace rotlab
