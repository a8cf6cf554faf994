#include "rotlab/experiments.hpp"
#include "rotlab/figures.hpp"
#include "rotlab/identities.hpp"
#include "rotlab/text_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace rotlab;

namespace {

void emit(const ExperimentReport& rep, const std::string& report_path) {
    for (const GoalVerdict& v : rep.verdicts)
        std::cout << "  " << v.label << ": " << v.verdict << "\n";
    for (const std::string& n : rep.notes) std::cout << "  note: " << n << "\n";
    std::cout << rep.experiment << ": member=" << rep.member_count
              << " not_member=" << rep.not_member_count
              << " inconclusive=" << rep.inconclusive_count << " ("
              << rep.seconds << " s)" << (rep.expectations_met ? "" : "  [UNEXPECTED]") << "\n";
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        out << rep.to_json() << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rotlab: commutation-relation experiments over free algebras"};
    app.require_subcommand(1);

    std::string report_path, cache_dir;
    RunLimits limits;
    app.add_option("--report", report_path, "write the report as JSON to this path");
    app.add_option("--cache", cache_dir, "basis cache directory");
    app.add_option("--max-basis", limits.max_basis, "abort completion past this many elements");
    app.add_option("--max-seconds", limits.max_seconds, "wall-clock limit per completion");

    // check
    auto* check = app.add_subcommand("check", "run one theorem instance");
    std::string tag, system_file, barring;
    int n = 4, bound = -1, k_param = 1;
    bool inverses = false;
    check->add_option("--tag", tag, "relation-system tag");
    check->add_option("--system", system_file, "relation-system JSON file to check instead");
    check->add_option("--n", n, "number of indexed elements N");
    check->add_option("--bound", bound, "degree truncation bound");
    check->add_option("--k", k_param, "k for rule_of_k");
    check->add_option("--barring", barring, "barred indices for super_rot, e.g. 2 or 1,3");
    std::string pattern;
    check->add_option("--pattern", pattern, "8-letter word for pattern_word");
    check->add_flag("--inverses", inverses, "adjoin formal inverses (potentially invertible atoms)");

    auto* scan = app.add_subcommand("scan256", "classify the 256 pattern words");
    std::string subset;
    scan->add_option("--subset", subset, "'stratified16' for the smoke subset");

    app.add_subcommand("counterexamples", "reproduce the non-membership results");

    auto* rok = app.add_subcommand("rule-of-k", "rule-of-k failure scan");
    int rok_k = 1, rok_n = 0;
    rok->add_option("--k", rok_k, "hypotheses cover |S| <= k")->required();
    rok->add_option("--n", rok_n, "N (default k+1)");

    app.add_subcommand("identities", "verify the displayed proof identities");

    auto* dehn_cmd = app.add_subcommand("dehn", "validate the builtin diagrams");
    std::string figure_id;
    dehn_cmd->add_option("--figure", figure_id, "one figure id: 1, 2:<n>, 3, 4, 5:<n>");

    auto* exp = app.add_subcommand("export", "write a relation system as JSON");
    std::string exp_tag, exp_out, exp_barring, exp_pattern;
    int exp_n = 4, exp_bound = -1, exp_k = 1;
    bool exp_inverses = false;
    exp->add_option("--system", exp_tag, "relation-system tag")->required();
    exp->add_option("--n", exp_n, "N");
    exp->add_option("--bound", exp_bound, "bound");
    exp->add_option("--k", exp_k, "k for rule_of_k");
    exp->add_option("--pattern", exp_pattern, "8-letter word for pattern_word");
    exp->add_option("--barring", exp_barring, "barred indices for super_rot");
    exp->add_flag("--inverses", exp_inverses, "adjoin inverses");
    exp->add_option("--out", exp_out, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);
    limits.cache_dir = cache_dir;

    auto parse_barring = [](const std::string& text, int nn) {
        std::set<int> barred;
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) barred.insert(std::stoi(tok));
        (void)nn;
        return BarPattern(barred);
    };

    try {
        if (check->parsed()) {
            ExperimentReport rep;
            if (!system_file.empty()) {
                std::ifstream in(system_file);
                std::stringstream ss;
                ss << in.rdbuf();
                RelationSystem sys = RelationSystem::from_json(ss.str());
                rep = run_system(sys, limits);
            } else {
                BuildParams p;
                p.adjoin_inverses = inverses;
                p.k = k_param;
                p.pattern = pattern;
                if (!barring.empty()) p.bars = parse_barring(barring, n);
                rep = cmd_check_theorem(tag, n, bound, p, limits);
            }
            emit(rep, report_path);
            return rep.expectations_met && !rep.truncated ? 0 : 1;
        }
        if (scan->parsed()) {
            std::vector<std::string> words =
                subset == "stratified16" ? stratified_pattern_words() : all_pattern_words();
            ExperimentReport rep = cmd_scan_256(words, limits);
            emit(rep, report_path);
            return rep.expectations_met ? 0 : 1;
        }
        if (app.get_subcommand("counterexamples")->parsed()) {
            ExperimentReport rep = cmd_counterexamples(limits);
            emit(rep, report_path);
            return rep.expectations_met ? 0 : 1;
        }
        if (rok->parsed()) {
            ExperimentReport rep = cmd_scan_rule_of_k(rok_k, rok_n > 0 ? rok_n : rok_k + 1, limits);
            emit(rep, report_path);
            return rep.expectations_met ? 0 : 1;
        }
        if (app.get_subcommand("identities")->parsed()) {
            ExperimentReport rep = cmd_verify_identities();
            emit(rep, report_path);
            return rep.expectations_met ? 0 : 1;
        }
        if (dehn_cmd->parsed()) {
            std::vector<std::string> ids =
                figure_id.empty() ? default_figure_ids() : std::vector<std::string>{figure_id};
            ExperimentReport rep = cmd_dehn_validate(ids);
            emit(rep, report_path);
            return rep.expectations_met ? 0 : 1;
        }
        if (exp->parsed()) {
            BuildParams p;
            p.adjoin_inverses = exp_inverses;
            p.k = exp_k;
            p.pattern = exp_pattern;
            if (exp_bound > 0) p.bound = exp_bound;
            if (!exp_barring.empty()) p.bars = parse_barring(exp_barring, exp_n);
            RelationSystem sys = build(exp_tag, exp_n, p);
            if (exp_out.empty()) {
                std::cout << sys.to_json() << "\n";
            } else {
                std::ofstream out(exp_out);
                out << sys.to_json() << "\n";
            }
            return 0;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 0;
}
