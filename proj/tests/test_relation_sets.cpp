#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rotlab/relation_system.hpp"
#include "rotlab/text_io.hpp"

#include <algorithm>
#include <set>

using namespace rotlab;

namespace {

std::vector<CentralPoly> linear_family(const AlphabetPtr& alph, SeriesVar var, VarFamily fam,
                                       int n, int bound) {
    std::vector<CentralPoly> out;
    for (int i = 1; i <= n; ++i)
        out.push_back(series_from_spec(SeriesSpec::linear(var, family_gen(fam, i)), alph, bound));
    return out;
}

std::multiset<std::string> poly_strings(const std::vector<FreePoly>& ps) {
    std::multiset<std::string> out;
    for (const FreePoly& p : ps) out.insert(p.str());
    return out;
}

} // namespace

TEST_CASE("decompose_commutation produces the displayed components") {
    auto A = share(Alphabet::uv(2));
    auto gs = linear_family(A, SeriesVar::x, VarFamily::u, 2, 4);
    auto hs = linear_family(A, SeriesVar::y, VarFamily::v, 2, 4);
    RelationSystem sys = decompose_commutation(gs, hs, 2);
    CHECK(sys.homogeneous);

    // |S| = 1 contributes a single (1,1) component [u_i, v_i]
    FreePoly c11 = parse_free_poly("u1.v1 - v1.u1", A);
    CHECK(std::count(sys.hypotheses.begin(), sys.hypotheses.end(), c11) == 1);

    // S = {1,2}: (1,1) component is [u2+u1, v2+v1]
    FreePoly e1e1 = commutator(parse_free_poly("u1 + u2", A), parse_free_poly("v1 + v2", A));
    CHECK(std::count(sys.hypotheses.begin(), sys.hypotheses.end(), e1e1) == 1);

    // S = {1,2}: (2,1) component is [u2.u1, v2+v1]
    FreePoly e2e1 = commutator(parse_free_poly("u2.u1", A), parse_free_poly("v1 + v2", A));
    CHECK(std::count(sys.hypotheses.begin(), sys.hypotheses.end(), e2e1) == 1);

    // max_card = N means no goals
    CHECK(sys.goals.empty());
}

TEST_CASE("decompose_commutation flags a bound that loses components") {
    auto A = share(Alphabet::uv(2));
    auto gs = linear_family(A, SeriesVar::x, VarFamily::u, 2, 3);
    auto hs = linear_family(A, SeriesVar::y, VarFamily::v, 2, 3);
    // [g_{12}, h_{12}] has bidegree up to (2,2): bound 3 silently drops it
    CHECK_THROWS_AS(decompose_commutation(gs, hs, 1), std::invalid_argument);
    CHECK_NOTHROW(decompose_commutation(gs, hs, 1, /*allow_truncation=*/true));
}

TEST_CASE("elem_rot hypotheses match the series decomposition") {
    const int n = 3;
    RelationSystem direct = build("elem_rot", n);
    auto A = direct.alphabet;
    auto gs = linear_family(A, SeriesVar::x, VarFamily::u, n, 2 * n);
    auto hs = linear_family(A, SeriesVar::y, VarFamily::v, n, 2 * n);
    RelationSystem decomposed = decompose_commutation(gs, hs, 3);

    // as sets of polynomials, up to sign: [e_k, e_l] vs the (k,l) component's sign
    std::multiset<std::string> a, b;
    for (const FreePoly& p : direct.hypotheses)
        a.insert(std::min(p.str(), (-p).str()));
    for (const FreePoly& p : decomposed.hypotheses)
        b.insert(std::min(p.str(), (-p).str()));
    CHECK(a == b);
    CHECK(direct.hypotheses.size() == 17); // 7 + 4 + 4 + 1 + 1 for N = 3
}

TEST_CASE("every builder yields well-formed, correctly flagged systems") {
    for (const std::string& tag : supported_tags()) {
        BuildParams p;
        if (tag == "pattern_word") p.pattern = "xyxyxyxy";
        if (tag == "rule_of_k") p.k = 1;
        int n = tag == "e1e2_remark" ? 3 : 4;
        RelationSystem sys = build(tag, n, p);
        CHECK(!sys.hypotheses.empty());
        bool all_hom = true;
        for (const FreePoly& h : sys.hypotheses) {
            CHECK(!h.is_zero());
            all_hom &= h.is_homogeneous();
        }
        CHECK(sys.homogeneous == all_hom);
        // labels are unique
        std::set<std::string> labels;
        for (const Goal& goal : sys.goals) CHECK(labels.insert(goal.label).second);
    }
    CHECK_THROWS_AS(build("no_such_tag", 3), std::invalid_argument);
}

TEST_CASE("linear and pure-power builders are homogeneous, inverse-adjoined ones are not") {
    CHECK(build("elem_rot", 4).homogeneous);
    CHECK(build("elem_rot_single", 4).homogeneous);
    CHECK(build("linear_strengthened", 4).homogeneous);
    BuildParams pw;
    pw.pattern = "xxxxyyyy";
    CHECK(build("pattern_word", 4, pw).homogeneous);
    CHECK(build("paired_factors", 4).homogeneous);
    CHECK(build("e1e2_remark", 3).homogeneous);

    BuildParams inv;
    inv.adjoin_inverses = true;
    CHECK_FALSE(build("half_rot", 4, inv).homogeneous);
    CHECK_FALSE(build("rotv2", 4, inv).homogeneous);
}

TEST_CASE("elem_rot_single is elem_rot with the families identified") {
    const int n = 4;
    RelationSystem pair = build("elem_rot", n);
    RelationSystem single = build("elem_rot_single", n);
    auto A1 = single.alphabet;

    // substitute v_i -> u_i into the two-family hypotheses, drop what
    // becomes trivial, and compare as sets up to sign
    auto substituted = [&](const FreePoly& p) {
        std::vector<FreePoly::Term> ts;
        for (const auto& [w, c] : p.terms()) {
            std::vector<Gen> ls;
            for (Gen x : w.letters())
                ls.push_back(x.kind() == GenKind::v ? u(x.index()) : x);
            ts.emplace_back(Word(std::move(ls)), c);
        }
        return FreePoly::from_terms(A1, std::move(ts));
    };
    std::set<std::string> from_pair, from_single;
    for (const FreePoly& p : pair.hypotheses) {
        FreePoly q = substituted(p);
        if (!q.is_zero()) from_pair.insert(std::min(q.str(), (-q).str()));
    }
    for (const FreePoly& p : single.hypotheses)
        from_single.insert(std::min(p.str(), (-p).str()));
    CHECK(from_pair == from_single);
}

TEST_CASE("pattern_word xxxxyyyy equals the two-sided linear decomposition") {
    BuildParams p;
    p.pattern = "xxxxyyyy";
    RelationSystem from_pattern = build("pattern_word", 4, p);
    auto A = from_pattern.alphabet;
    auto gs = linear_family(A, SeriesVar::x, VarFamily::u, 4, 8);
    auto hs = linear_family(A, SeriesVar::y, VarFamily::v, 4, 8);
    RelationSystem direct = decompose_commutation(gs, hs, 3);
    CHECK(poly_strings(from_pattern.hypotheses) == poly_strings(direct.hypotheses));
    CHECK(from_pattern.goals.size() == direct.goals.size());
}

TEST_CASE("rule_of_k smallest case has the expected shape") {
    BuildParams p;
    p.k = 1;
    RelationSystem sys = build("rule_of_k", 2, p);
    // hypotheses: components of [g_i, h_i] = x^2 [u_i, v_i]
    CHECK(sys.hypotheses.size() == 2);
    for (const FreePoly& h : sys.hypotheses) CHECK(h.degree() == 2);
    // goals: components x^2..x^4 of [g2 g1, h2 h1]
    CHECK(sys.goals.size() == 3);
}

TEST_CASE("relation systems serialize and parse back") {
    BuildParams p;
    p.k = 1;
    for (const std::string& tag : {"elem_rot", "half_rot", "rule_of_k"}) {
        RelationSystem sys = build(tag, 3, p);
        RelationSystem back = RelationSystem::from_json(sys.to_json());
        CHECK(back.name == sys.name);
        CHECK(*back.alphabet == *sys.alphabet);
        CHECK(back.degree_bound == sys.degree_bound);
        CHECK(back.homogeneous == sys.homogeneous);
        REQUIRE(back.hypotheses.size() == sys.hypotheses.size());
        for (size_t i = 0; i < sys.hypotheses.size(); ++i)
            CHECK(back.hypotheses[i] == sys.hypotheses[i]);
        REQUIRE(back.goals.size() == sys.goals.size());
        for (size_t i = 0; i < sys.goals.size(); ++i) {
            CHECK(back.goals[i].label == sys.goals[i].label);
            CHECK(back.goals[i].poly == sys.goals[i].poly);
        }
    }
}

TEST_CASE("goal labels identify subset and bidegree") {
    BuildParams p;
    p.k = 2;
    RelationSystem sys = build("rule_of_k", 3, p);
    for (const Goal& goal : sys.goals) {
        CHECK(goal.label.find("S={1,2,3}") != std::string::npos);
        CHECK(goal.label.find("deg=(") != std::string::npos);
    }
}
