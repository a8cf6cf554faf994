#pragma once

#include "rotlab/ncgb.hpp"
#include "rotlab/relation_system.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace rotlab {

struct GoalVerdict {
    std::string label;
    std::string verdict; // member / not_member_up_to_bound(d) / inconclusive(d)
    bool is_member = false;
};

/// One experiment run: per-goal verdicts plus summary counts. Reports
/// serialize to JSON; two runs with equal parameters produce identical
/// reports apart from the timing field.
struct ExperimentReport {
    std::string experiment;
    std::string parameters;
    std::vector<GoalVerdict> verdicts;
    size_t member_count = 0;
    size_t not_member_count = 0;
    size_t inconclusive_count = 0;
    bool expectations_met = true;
    bool truncated = false;
    double seconds = 0.0;
    std::vector<std::string> notes;
    std::vector<std::string> cache_refs;

    void add(const std::string& label, const Verdict& v);
    std::string to_json(bool include_timing = true) const;
};

struct RunLimits {
    size_t max_basis = 200000;
    double max_seconds = 3600.0;
    std::string cache_dir; // empty: no cache
    bool certificates = true;
};

/// Complete the system's hypotheses (through the cache if enabled) and
/// query every goal.
ExperimentReport run_system(const RelationSystem& sys, const RunLimits& limits,
                            std::function<bool(const GoalVerdict&)> expectation = nullptr);

/// Positive theorem instance: every goal must come back member.
ExperimentReport cmd_check_theorem(const std::string& tag, int n, int bound,
                                   const BuildParams& params, const RunLimits& limits);

/// The closed-form predicate of the 256-word scan: true = the rule holds.
bool pattern_predicate_holds(const std::string& word8);
std::vector<std::string> all_pattern_words();
/// 16-word smoke subset: 8 predicted-hold, 8 predicted-fail covering the
/// three predicate branches.
std::vector<std::string> stratified_pattern_words();

ExperimentReport cmd_scan_256(const std::vector<std::string>& words, const RunLimits& limits);

ExperimentReport cmd_counterexamples(const RunLimits& limits);
ExperimentReport cmd_scan_rule_of_k(int k, int n, const RunLimits& limits);
ExperimentReport cmd_verify_identities();
ExperimentReport cmd_dehn_validate(const std::vector<std::string>& figure_ids);

} // namespace rotlab
