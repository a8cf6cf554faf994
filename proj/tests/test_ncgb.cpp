#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rotlab/ncgb.hpp"
#include "rotlab/ncgb_oracle.hpp"
#include "rotlab/relation_system.hpp"
#include "rotlab/text_io.hpp"

#include <random>

using namespace rotlab;

namespace {

AlphabetPtr uv2() {
    static AlphabetPtr a = share(Alphabet::uv(2));
    return a;
}

FreePoly random_homogeneous(std::mt19937_64& rng, const AlphabetPtr& alph, int deg,
                            int max_terms) {
    std::uniform_int_distribution<int> nterms(1, max_terms), coef(-2, 2),
        pick(0, int(alph->size()) - 1);
    std::vector<FreePoly::Term> ts;
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        std::vector<Gen> ls;
        for (int i = 0; i < deg; ++i) ls.push_back(alph->generators()[size_t(pick(rng))]);
        int c = coef(rng);
        if (c == 0) c = 1;
        ts.emplace_back(Word(std::move(ls)), Rational(c));
    }
    return FreePoly::from_terms(alph, std::move(ts));
}

} // namespace

TEST_CASE("monomial order is multiplicative and well-founded per degree") {
    auto A = uv2();
    MonomialOrder ord = MonomialOrder::deglex_default(*A);
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<int> len(0, 4), pick(0, 3);
    auto random_word = [&]() {
        std::vector<Gen> ls;
        int n = len(rng);
        for (int i = 0; i < n; ++i) ls.push_back(A->generators()[size_t(pick(rng))]);
        return Word(std::move(ls));
    };
    for (int trial = 0; trial < 5000; ++trial) {
        Word w1 = random_word(), w2 = random_word(), a = random_word(), b = random_word();
        if (ord.less(w1, w2)) {
            CHECK(ord.less(a * w1 * b, a * w2 * b));
            CHECK_FALSE(ord.less(w2, w1));
        }
        CHECK_FALSE(ord.less(w1, w1));
    }
}

TEST_CASE("single-relation bases and simple normal forms") {
    auto A = uv2();
    FreePoly u1 = FreePoly::gen(A, u(1)), u2 = FreePoly::gen(A, u(2)),
             v1 = FreePoly::gen(A, v(1));

    // no self-overlap: the basis is the generator itself
    GroebnerBasis gb1 = complete({commutator(u1, v1)}, MonomialOrder::deglex_default(*A), 4);
    CHECK(gb1.elements().size() == 1);
    CHECK(gb1.normal_form(gb1.elements()[0]).is_zero());

    // the leading word depends on the precedence; with v before u the
    // lead of [u1,v1] is u1.v1 and u1.v1 rewrites to v1.u1
    MonomialOrder v_first = MonomialOrder::deglex({v(1), v(2), u(1), u(2)});
    GroebnerBasis gb2 = complete({commutator(u1, v1)}, v_first, 4);
    CHECK(gb2.normal_form(u1 * v1) == v1 * u1);

    GroebnerBasis gb3 = complete({commutator(u1, v1), commutator(u2, v1)},
                                 MonomialOrder::deglex_default(*A), 4);
    CHECK(gb3.normal_form(commutator(u1 * u2, v1)).is_zero());

    CHECK_THROWS_AS(gb3.normal_form(u1 * u1 * u1 * u1 * u1), std::invalid_argument);
}

TEST_CASE("membership verdicts and certificates") {
    auto A = uv2();
    FreePoly u1 = FreePoly::gen(A, u(1)), u2 = FreePoly::gen(A, u(2)),
             v1 = FreePoly::gen(A, v(1)), v2 = FreePoly::gen(A, v(2));
    std::vector<FreePoly> gens = {commutator(u1, v1), commutator(u2, v1), commutator(u2, v2)};
    GroebnerBasis gb = complete(gens, MonomialOrder::deglex_default(*A), 6);

    // zero is a member with an empty certificate
    Verdict z = gb.membership(FreePoly::zero(A));
    REQUIRE(z.is_member());
    CHECK(std::get<Member>(z.v).certificate.empty());

    Verdict m = gb.membership(commutator(u1 * u2, v1));
    REQUIRE(m.is_member());
    const Member& mem = std::get<Member>(m.v);
    CHECK(mem.certificate_checked);
    CHECK(expand_certificate(mem.certificate, gens, A) == commutator(u1 * u2, v1));

    // [u1, v2] does not follow; the system is homogeneous, so this is a proof
    Verdict nm = gb.membership(commutator(u1, v2));
    CHECK(nm.is_not_member());
}

TEST_CASE("brute-force oracle agrees on random small homogeneous systems") {
    auto A = uv2();
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<int> deg(1, 2), count(1, 3);
    int checked = 0;
    for (int sys = 0; sys < 60; ++sys) {
        std::vector<FreePoly> gens;
        int k = count(rng);
        for (int i = 0; i < k; ++i) gens.push_back(random_homogeneous(rng, A, deg(rng), 3));
        GroebnerBasis gb = complete(gens, MonomialOrder::deglex_default(*A), 4);
        for (int q = 0; q < 4; ++q) {
            FreePoly query = random_homogeneous(rng, A, deg(rng) + 1, 3);
            bool member = gb.membership(query).is_member();
            bool oracle = oracle_in_span(query, gens, 4);
            CHECK(member == oracle);
            ++checked;
        }
        // membership of each generator itself
        for (const FreePoly& g0 : gens) CHECK(gb.membership(g0).is_member());
    }
    CHECK(checked >= 200);
}

TEST_CASE("verdicts are independent of the generator precedence") {
    BuildParams p;
    p.k = 1;
    std::vector<RelationSystem> systems = {build("rule_of_k", 2, p), build("elem_rot", 3),
                                           build("elem_rot_single", 3)};
    for (RelationSystem& sys : systems) {
        std::vector<Gen> rev = sys.alphabet->generators();
        std::reverse(rev.begin(), rev.end());
        GroebnerBasis a =
            complete(sys.hypotheses, MonomialOrder::deglex_default(*sys.alphabet), sys.degree_bound);
        GroebnerBasis b = complete(sys.hypotheses, MonomialOrder::deglex(rev), sys.degree_bound);
        for (const Goal& goal : sys.goals) {
            CAPTURE(sys.name);
            CAPTURE(goal.label);
            CHECK(a.membership(goal.poly).is_member() == b.membership(goal.poly).is_member());
        }
    }
}

TEST_CASE("homogeneous verdicts are stable when the bound is raised") {
    BuildParams p;
    p.k = 1;
    std::vector<RelationSystem> systems = {build("rule_of_k", 2, p), build("elem_rot", 3),
                                           build("elem_rot_single", 3)};
    for (RelationSystem& sys : systems) {
        GroebnerBasis lo =
            complete(sys.hypotheses, MonomialOrder::deglex_default(*sys.alphabet), sys.degree_bound);
        GroebnerBasis hi = complete(sys.hypotheses, MonomialOrder::deglex_default(*sys.alphabet),
                                    sys.degree_bound + 2);
        for (const Goal& goal : sys.goals) {
            CAPTURE(sys.name);
            CAPTURE(goal.label);
            CHECK(lo.membership(goal.poly).is_member() == hi.membership(goal.poly).is_member());
        }
    }
}

TEST_CASE("completion is deterministic and bases are canonical") {
    RelationSystem sys = build("elem_rot", 3);
    GroebnerBasis a =
        complete(sys.hypotheses, MonomialOrder::deglex_default(*sys.alphabet), sys.degree_bound);
    GroebnerBasis b =
        complete(sys.hypotheses, MonomialOrder::deglex_default(*sys.alphabet), sys.degree_bound);
    REQUIRE(a.elements().size() == b.elements().size());
    for (size_t i = 0; i < a.elements().size(); ++i) CHECK(a.elements()[i] == b.elements()[i]);
    // monic, pairwise lead-irreducible
    for (size_t i = 0; i < a.elements().size(); ++i) {
        CHECK(a.elements()[i].leading_coeff() == Rational(1));
        for (size_t j = 0; j < a.elements().size(); ++j) {
            if (i == j) continue;
            CHECK_FALSE(
                a.elements()[i].leading_word().find_factor(a.elements()[j].leading_word()));
        }
    }
}

TEST_CASE("degree-truncated Inconclusive for non-homogeneous systems") {
    // x X = 1 adjoined: x X x - x reduces to zero, but non-membership of an
    // unrelated atom cannot be certified
    Alphabet base({g(1), g(2)});
    auto A = share(base.with_inverses({g(1)}));
    Gen G = g(1).inverse_symbol();
    FreePoly one = FreePoly::one(A);
    std::vector<FreePoly> gens = {FreePoly::word(A, Word{g(1), G}) - one,
                                  FreePoly::word(A, Word{G, g(1)}) - one};
    GroebnerBasis gb = complete(gens, MonomialOrder::deglex_default(*A), 6);
    CHECK_FALSE(gb.homogeneous_source());
    Verdict v = gb.membership(FreePoly::gen(A, g(2)));
    CHECK(v.is_inconclusive());
    CHECK(gb.membership(FreePoly::word(A, Word{g(1), G, g(2)}) - FreePoly::gen(A, g(2)))
              .is_member());
}

TEST_CASE("bases export to JSON and come back usable") {
    RelationSystem sys = build("elem_rot", 3);
    GroebnerBasis gb =
        complete(sys.hypotheses, MonomialOrder::deglex_default(*sys.alphabet), sys.degree_bound);
    GroebnerBasis back = GroebnerBasis::from_json(gb.to_json());
    CHECK(back.bound() == gb.bound());
    CHECK(back.complete_below() == gb.complete_below());
    CHECK(back.homogeneous_source() == gb.homogeneous_source());
    REQUIRE(back.elements().size() == gb.elements().size());
    for (const Goal& goal : sys.goals) {
        CHECK(back.membership(goal.poly).is_member() == gb.membership(goal.poly).is_member());
        CHECK(back.normal_form(goal.poly) == gb.normal_form(goal.poly));
    }
}

TEST_CASE("resource limits produce explicitly truncated results") {
    RelationSystem sys = build("elem_rot", 4);
    CompletionOptions opts;
    opts.max_basis = 5;
    GroebnerBasis gb = complete(sys.hypotheses, MonomialOrder::deglex_default(*sys.alphabet),
                                sys.degree_bound, opts);
    CHECK(gb.stats().truncated);
    CHECK(gb.complete_below() < gb.bound());
}
