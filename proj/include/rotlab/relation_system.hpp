#pragma once

#include "rotlab/symfun.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rotlab {

struct Goal {
    std::string label;
    FreePoly poly;
};

/// A finitely presented quotient plus membership queries: named relation
/// generators (hypotheses) and labeled goal polynomials of one theorem,
/// conjecture, example or remark instance.
struct RelationSystem {
    std::string name;
    AlphabetPtr alphabet;
    std::vector<FreePoly> hypotheses;
    std::vector<Goal> goals;
    int degree_bound = 0;
    bool homogeneous = false; // true iff every hypothesis is homogeneous

    void finalize(); // computes the homogeneous flag

    std::string to_json() const;
    static RelationSystem from_json(const std::string& text);
};

/// Hypotheses = all nonzero bidegree components of [g_S, h_S] for
/// 1 <= |S| <= max_card; goals = the components for |S| > max_card.
/// Unless allow_truncation is set, errors when the bound provably cannot
/// contain the full [g_S, h_S] of the largest S (finite factors only).
RelationSystem decompose_commutation(const std::vector<CentralPoly>& g,
                                     const std::vector<CentralPoly>& h, int max_card,
                                     bool allow_truncation = false,
                                     const std::string& name = "decompose");

struct BuildParams {
    int bound = -1;                 // -1: per-tag default
    std::optional<BarPattern> bars; // super_rot
    std::string pattern;            // pattern_word: 8 letters from {x,y}
    int k = 1;                      // rule_of_k
    bool adjoin_inverses = false;   // atom-level positive direction
};

/// Named builders, one per supported theorem tag:
///   elem_rot, elem_rot_single, super_rot, half_rot, linear_strengthened,
///   master_criterion, paired_factors, pattern_word, e1e2_remark,
///   rule_of_k, quadratic_rot, rotv2
RelationSystem build(const std::string& tag, int n, const BuildParams& params = {});

std::vector<std::string> supported_tags();

} // namespace rotlab
