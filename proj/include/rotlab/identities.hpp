#pragma once

#include "rotlab/inverse_rewrite.hpp"
#include "rotlab/ncgb.hpp"

#include <string>
#include <vector>

namespace rotlab {

/// A displayed proof identity, stored as data: verification means the
/// inverse-cancellation normal form of (left - right) is exactly zero,
/// with no other relations involved. Summands are kept separately so
/// tests can flip single signs and watch the identity break.
struct NamedIdentity {
    std::string tag;
    AlphabetPtr alphabet;
    std::vector<FreePoly> left_summands;
    std::vector<FreePoly> right_summands;

    FreePoly left() const;
    FreePoly right() const;
};

struct VerifyResult {
    bool zero = false;
    FreePoly residual;

    explicit VerifyResult(FreePoly r) : zero(r.is_zero()), residual(std::move(r)) {}
};

const std::vector<NamedIdentity>& named_identities();
const NamedIdentity& identity(const std::string& tag);

VerifyResult verify(const NamedIdentity& id);
VerifyResult verify(const std::string& tag);

/// Residual after flipping the sign of one summand (left side for
/// index < |left_summands|, right side after).
VerifyResult verify_with_flipped_sign(const NamedIdentity& id, size_t summand_index);
size_t summand_count(const NamedIdentity& id);

/// Groebner membership check of the product-rearrangement lemma over
/// atoms g_1..g_m, z, z' with g_1, g_m inverted: is the conclusion
/// z g_{m-1}...g_1 = g_m...g_2 z' implied by z g_1 = g_m z' and
/// z g_b g_1 = g_m g_b z'? Never NotMember: the ideal is non-homogeneous.
Verdict check_l_for_super(int m, int bound, bool include_first_hypothesis = true);

} // namespace rotlab
