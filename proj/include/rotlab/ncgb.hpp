#pragma once

#include "rotlab/free_poly.hpp"

#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace rotlab {

/// Degree-lexicographic order with an explicit generator precedence.
/// Multiplicative and a well-order on each degree.
class MonomialOrder {
public:
    /// Precedence = the packed-code order (u < v < g < h < aux < inverses).
    static MonomialOrder deglex_default(const Alphabet& alphabet);
    /// Explicit precedence, earlier = smaller. Must cover the alphabet.
    static MonomialOrder deglex(const std::vector<Gen>& precedence);

    bool less(const Word& a, const Word& b) const;
    bool greater(const Word& a, const Word& b) const { return less(b, a); }
    int rank(Gen x) const;

    const std::vector<Gen>& precedence() const { return precedence_; }

private:
    std::vector<Gen> precedence_;
    std::map<uint32_t, int> rank_;
};

/// One two-sided product c * left * generator[gen] * right, the building
/// block of membership certificates. `gen` indexes the original
/// generator list the basis was completed from.
struct CertTerm {
    Rational coeff;
    Word left;
    size_t gen = 0;
    Word right;
};

using Certificate = std::vector<CertTerm>;

/// Expand sum_i c_i * left_i * gens[gen_i] * right_i.
FreePoly expand_certificate(const Certificate& cert, const std::vector<FreePoly>& generators,
                            const AlphabetPtr& alphabet);

struct Member {
    Certificate certificate; // empty when the basis was loaded without provenance
    bool certificate_checked = false;
};
struct NotMemberUpToBound {
    int bound = 0;
};
struct Inconclusive {
    int bound = 0;
};

/// Ideal-membership answer. NotMemberUpToBound is only produced for
/// homogeneous systems, where it is a genuine non-membership proof for
/// queries within the bound.
struct Verdict {
    std::variant<Member, NotMemberUpToBound, Inconclusive> v;

    bool is_member() const { return std::holds_alternative<Member>(v); }
    bool is_not_member() const { return std::holds_alternative<NotMemberUpToBound>(v); }
    bool is_inconclusive() const { return std::holds_alternative<Inconclusive>(v); }
    std::string str() const;
};

struct CompletionOptions {
    bool track_certificates = true;
    size_t max_basis = std::numeric_limits<size_t>::max();
    double max_seconds = std::numeric_limits<double>::infinity();
};

struct CompletionStats {
    size_t spolys_reduced = 0;
    size_t reductions_to_zero = 0;
    size_t basis_size = 0;
    bool truncated = false; // a resource limit fired before the bound was reached
};

struct GbRuntime; // reduction index, built lazily and shared

/// Degree-truncated two-sided Groebner basis. Elements are monic, tail
/// reduced, pairwise lead-irreducible and sorted; given (generators,
/// order, bound) the result is deterministic.
class GroebnerBasis {
public:
    GroebnerBasis(AlphabetPtr alphabet, MonomialOrder order, int bound);

    const std::vector<FreePoly>& elements() const { return elements_; }
    const MonomialOrder& order() const { return order_; }
    int bound() const { return bound_; }
    int complete_below() const { return complete_below_; }
    bool homogeneous_source() const { return homogeneous_source_; }
    const std::string& source() const { return source_; }
    const CompletionStats& stats() const { return stats_; }
    const AlphabetPtr& alphabet() const { return alphabet_; }
    const std::vector<FreePoly>& input_generators() const { return inputs_; }
    bool has_certificates() const { return !certs_.empty() || elements_.empty(); }

    /// Canonical remainder: no word of the result contains any leading
    /// word of the basis as a factor. Degree above the bound is an error.
    FreePoly normal_form(const FreePoly& p, Certificate* cert = nullptr) const;

    Verdict membership(const FreePoly& q) const;

    std::string to_json() const;
    static GroebnerBasis from_json(const std::string& text);

    friend GroebnerBasis complete(const std::vector<FreePoly>& generators,
                                  const MonomialOrder& order, int bound,
                                  const CompletionOptions& opts, std::string source);

private:
    AlphabetPtr alphabet_;
    MonomialOrder order_;
    int bound_;
    int complete_below_ = 0;
    bool homogeneous_source_ = false;
    std::string source_;
    CompletionStats stats_;
    std::vector<FreePoly> inputs_;        // original generators (certificate targets)
    std::vector<FreePoly> elements_;      // canonical reduced basis
    std::vector<Certificate> certs_;      // per element, in terms of inputs_
    mutable std::shared_ptr<const GbRuntime> runtime_; // lazy, immutable once built
};

/// Buchberger-style obstruction completion truncated at `bound`,
/// obstructions processed in increasing overlap degree.
GroebnerBasis complete(const std::vector<FreePoly>& generators, const MonomialOrder& order,
                       int bound, const CompletionOptions& opts = {}, std::string source = "");

} // namespace rotlab
