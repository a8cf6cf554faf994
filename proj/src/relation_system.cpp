#include "rotlab/relation_system.hpp"
#include "rotlab/text_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rotlab {

void RelationSystem::finalize() {
    homogeneous = std::all_of(hypotheses.begin(), hypotheses.end(),
                              [](const FreePoly& p) { return p.is_homogeneous(); });
}

std::string RelationSystem::to_json() const {
    nlohmann::json j;
    j["name"] = name;
    std::vector<std::string> alph;
    for (Gen x : alphabet->generators()) alph.push_back(x.name());
    j["alphabet"] = alph;
    std::vector<std::string> hyps;
    for (const FreePoly& p : hypotheses) hyps.push_back(p.str());
    j["hypotheses"] = hyps;
    nlohmann::json gs = nlohmann::json::array();
    for (const Goal& g : goals) gs.push_back({{"label", g.label}, {"poly", g.poly.str()}});
    j["goals"] = gs;
    j["degree_bound"] = degree_bound;
    j["homogeneous"] = homogeneous;
    return j.dump(2);
}

RelationSystem RelationSystem::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    RelationSystem sys;
    sys.name = j.at("name").get<std::string>();
    std::vector<Gen> gens;
    for (const auto& s : j.at("alphabet")) gens.push_back(Gen::parse(s.get<std::string>()));
    sys.alphabet = share(Alphabet(gens));
    for (const auto& s : j.at("hypotheses"))
        sys.hypotheses.push_back(parse_free_poly(s.get<std::string>(), sys.alphabet));
    for (const auto& gj : j.at("goals"))
        sys.goals.push_back({gj.at("label").get<std::string>(),
                             parse_free_poly(gj.at("poly").get<std::string>(), sys.alphabet)});
    sys.degree_bound = j.at("degree_bound").get<int>();
    sys.finalize();
    return sys;
}

namespace {

std::string goal_label(const IndexSubset& s, BiDegree d) {
    std::ostringstream os;
    os << "S=" << s.str() << ",deg=(" << d.x << "," << d.y << ")";
    return os.str();
}

std::string goal_label_kl(const IndexSubset& s, int k, int l) {
    std::ostringstream os;
    os << "S=" << s.str() << ",k=" << k << ",l=" << l;
    return os.str();
}

void push_components(const CentralPoly& c, const IndexSubset& s, bool as_goal,
                     RelationSystem& sys) {
    for (const auto& [d, p] : c.coeffs()) {
        if (as_goal)
            sys.goals.push_back({goal_label(s, d), p});
        else
            sys.hypotheses.push_back(p);
    }
}

// inverse cancellation relations x X - 1 and X x - 1 for adjoined pairs
void push_inverse_relations(RelationSystem& sys) {
    for (Gen b : sys.alphabet->inverted_bases()) {
        Gen bi = b.inverse_symbol();
        FreePoly one = FreePoly::one(sys.alphabet);
        sys.hypotheses.push_back(FreePoly::word(sys.alphabet, Word{b, bi}) - one);
        sys.hypotheses.push_back(FreePoly::word(sys.alphabet, Word{bi, b}) - one);
    }
}

FreePoly atom_sum(const AlphabetPtr& alph, GenKind kind, const IndexSubset& s) {
    FreePoly out = FreePoly::zero(alph);
    for (int i : s.members()) out += FreePoly::gen(alph, Gen(kind, uint16_t(i)));
    return out;
}

FreePoly atom_product(const AlphabetPtr& alph, GenKind kind, const IndexSubset& s) {
    std::vector<Gen> letters;
    const auto& ms = s.members();
    for (auto it = ms.rbegin(); it != ms.rend(); ++it) // largest leftmost
        letters.push_back(Gen(kind, uint16_t(*it)));
    return FreePoly::word(alph, Word(std::move(letters)));
}

int default_bound(int tag_default, const BuildParams& p) {
    return p.bound > 0 ? p.bound : tag_default;
}

RelationSystem build_elem_rot(int n, const BuildParams& p) {
    RelationSystem sys;
    sys.name = "elem_rot(N=" + std::to_string(n) + ")";
    sys.alphabet = share(Alphabet::uv(uint16_t(n)));
    sys.degree_bound = default_bound(2 * n, p);
    auto e = [&](int k, const IndexSubset& s, VarFamily f) { return elem(k, s, f, sys.alphabet); };
    // the five displayed hypothesis families
    for (const IndexSubset& s : IndexSubset::of_cardinality(n, 1, 3))
        sys.hypotheses.push_back(commutator(e(1, s, VarFamily::u), e(1, s, VarFamily::v)));
    for (const IndexSubset& s : IndexSubset::of_cardinality(n, 2, 3)) {
        sys.hypotheses.push_back(commutator(e(2, s, VarFamily::u), e(1, s, VarFamily::v)));
        sys.hypotheses.push_back(commutator(e(1, s, VarFamily::u), e(2, s, VarFamily::v)));
    }
    for (const IndexSubset& s : IndexSubset::of_cardinality(n, 3, 3)) {
        sys.hypotheses.push_back(commutator(e(3, s, VarFamily::u), e(1, s, VarFamily::v)));
        sys.hypotheses.push_back(commutator(e(1, s, VarFamily::u), e(3, s, VarFamily::v)));
    }
    for (const IndexSubset& s : IndexSubset::of_cardinality(n, 4, n))
        for (int k = 1; k <= int(s.size()); ++k)
            for (int l = 1; l <= int(s.size()); ++l) {
                FreePoly q = commutator(e(k, s, VarFamily::u), e(l, s, VarFamily::v));
                if (!q.is_zero()) sys.goals.push_back({goal_label_kl(s, k, l), q});
            }
    sys.finalize();
    return sys;
}

RelationSystem build_elem_rot_single(int n, const BuildParams& p) {
    RelationSystem sys;
    sys.name = "elem_rot_single(N=" + std::to_string(n) + ")";
    sys.alphabet = share(Alphabet::u_only(uint16_t(n)));
    sys.degree_bound = default_bound(2 * n, p);
    auto e = [&](int k, const IndexSubset& s) { return elem(k, s, VarFamily::u, sys.alphabet); };
    for (const IndexSubset& s : IndexSubset::of_cardinality(n, 2, 3))
        sys.hypotheses.push_back(commutator(e(1, s), e(2, s)));
    for (const IndexSubset& s : IndexSubset::of_cardinality(n, 3, 3))
        sys.hypotheses.push_back(commutator(e(1, s), e(3, s)));
    for (const IndexSubset& s : IndexSubset::of_cardinality(n, 2, n))
        for (int k = 1; k <= int(s.size()); ++k)
            for (int l = k + 1; l <= int(s.size()); ++l) {
                bool is_hyp = int(s.size()) <= 3 && k == 1 && (l == 2 || (l == 3 && s.size() == 3));
                if (is_hyp) continue;
                FreePoly q = commutator(e(k, s), e(l, s));
                if (!q.is_zero()) sys.goals.push_back({goal_label_kl(s, k, l), q});
            }
    sys.finalize();
    return sys;
}

RelationSystem build_super_rot(int n, const BuildParams& p) {
    RelationSystem sys;
    BarPattern bars = p.bars.value_or(BarPattern{});
    int bound = default_bound(6, p);
    sys.name = "super_rot(N=" + std::to_string(n) + ",bars=" + bars.str(n) + ")";
    sys.alphabet = share(Alphabet::uv(uint16_t(n)));
    sys.degree_bound = bound;
    auto e = [&](int k, const IndexSubset& s, VarFamily f) {
        return super_elem(k, s, bars, f, sys.alphabet);
    };
    for (const IndexSubset& s : IndexSubset::of_cardinality(n, 1, 3)) {
        for (int k = 1; k + 1 <= bound; ++k) {
            FreePoly a = commutator(e(k, s, VarFamily::u), e(1, s, VarFamily::v));
            if (!a.is_zero()) sys.hypotheses.push_back(a);
            if (k > 1) {
                FreePoly b = commutator(e(1, s, VarFamily::u), e(k, s, VarFamily::v));
                if (!b.is_zero()) sys.hypotheses.push_back(b);
            }
        }
    }
    for (const IndexSubset& s : IndexSubset::of_cardinality(n, 1, n)) {
        for (int k = 1; k <= bound; ++k)
            for (int l = 1; k + l <= bound; ++l) {
                if (int(s.size()) <= 3 && (k == 1 || l == 1)) continue;
                FreePoly q = commutator(e(k, s, VarFamily::u), e(l, s, VarFamily::v));
                if (!q.is_zero()) sys.goals.push_back({goal_label_kl(s, k, l), q});
            }
    }
    sys.finalize();
    return sys;
}

RelationSystem build_half_rot(int n, const BuildParams& p) {
    RelationSystem sys;
    sys.name = "half_rot(N=" + std::to_string(n) + ")";
    Alphabet base = Alphabet::gv(uint16_t(n));
    std::vector<Gen> invertible;
    if (p.adjoin_inverses)
        for (int i = 1; i <= n; ++i) invertible.push_back(g(uint16_t(i)));
    sys.alphabet = share(base.with_inverses(invertible));
    sys.degree_bound = default_bound(6, p);
    for (const IndexSubset& s : IndexSubset::of_cardinality(n, 1, 3))
        sys.hypotheses.push_back(commutator(atom_sum(sys.alphabet, GenKind::v, s),
                                            atom_product(sys.alphabet, GenKind::g, s)));
    push_inverse_relations(sys);
    for (const IndexSubset& s : IndexSubset::of_cardinality(n, 4, n))
        sys.goals.push_back({"S=" + s.str(),
                             commutator(atom_sum(sys.alphabet, GenKind::v, s),
                                        atom_product(sys.alphabet, GenKind::g, s))});
    sys.finalize();
    return sys;
}

RelationSystem build_linear_strengthened(int n, const BuildParams& p) {
    RelationSystem sys;
    sys.name = "linear_strengthened(N=" + std::to_string(n) + ")";
    Alphabet base = Alphabet::gh(uint16_t(n));
    std::vector<Gen> invertible;
    if (p.adjoin_inverses)
        for (int i = 1; i <= n; ++i) {
            invertible.push_back(g(uint16_t(i)));
            invertible.push_back(h(uint16_t(i)));
        }
    sys.alphabet = share(base.with_inverses(invertible));
    sys.degree_bound = default_bound(2 * n, p);
    auto gsum = [&](const IndexSubset& s) { return atom_sum(sys.alphabet, GenKind::g, s); };
    auto hsum = [&](const IndexSubset& s) { return atom_sum(sys.alphabet, GenKind::h, s); };
    auto gprod = [&](const IndexSubset& s) { return atom_product(sys.alphabet, GenKind::g, s); };
    auto hprod = [&](const IndexSubset& s) { return atom_product(sys.alphabet, GenKind::h, s); };
    for (const IndexSubset& s : IndexSubset::of_cardinality(n, 1, 1))
        sys.hypotheses.push_back(commutator(hsum(s), gsum(s)));
    for (const IndexSubset& s : IndexSubset::of_cardinality(n, 2, 2)) {
        sys.hypotheses.push_back(commutator(hsum(s), gsum(s)));
        sys.hypotheses.push_back(commutator(hsum(s), gprod(s)));
        sys.hypotheses.push_back(commutator(gsum(s), hprod(s)));
    }
    for (const IndexSubset& s : IndexSubset::of_cardinality(n, 3, 3)) {
        sys.hypotheses.push_back(commutator(hsum(s), gprod(s)));
        sys.hypotheses.push_back(commutator(gsum(s), hprod(s)));
    }
    push_inverse_relations(sys);
    for (const IndexSubset& s : IndexSubset::of_cardinality(n, 3, n))
        sys.goals.push_back({"[sum_g,sum_h],S=" + s.str(), commutator(gsum(s), hsum(s))});
    for (const IndexSubset& s : IndexSubset::of_cardinality(n, 4, n)) {
        sys.goals.push_back({"[sum_g,prod_h],S=" + s.str(), commutator(gsum(s), hprod(s))});
        sys.goals.push_back({"[sum_h,prod_g],S=" + s.str(), commutator(hsum(s), gprod(s))});
    }
    for (const IndexSubset& s : IndexSubset::of_cardinality(n, 2, n))
        sys.goals.push_back({"[prod_g,prod_h],S=" + s.str(), commutator(gprod(s), hprod(s))});
    sys.finalize();
    return sys;
}

RelationSystem build_master_criterion(int n, const BuildParams& p) {
    RelationSystem sys;
    sys.name = "master_criterion(N=" + std::to_string(n) + ")";
    Alphabet base = Alphabet::gh(uint16_t(n));
    std::vector<Gen> invertible;
    if (p.adjoin_inverses)
        for (int i = 1; i <= n; ++i) {
            invertible.push_back(g(uint16_t(i)));
            invertible.push_back(h(uint16_t(i)));
        }
    sys.alphabet = share(base.with_inverses(invertible));
    sys.degree_bound = default_bound(2 * n, p);
    const AlphabetPtr& A = sys.alphabet;
    auto G = [&](int i) { return FreePoly::gen(A, g(uint16_t(i))); };
    auto H = [&](int i) { return FreePoly::gen(A, h(uint16_t(i))); };
    for (int a = 1; a <= n; ++a) sys.hypotheses.push_back(commutator(G(a), H(a)));
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            sys.hypotheses.push_back(G(b) * commutator(G(a), H(b)) -
                                     commutator(H(a), G(b)) * G(a));
            sys.hypotheses.push_back(H(b) * commutator(H(a), G(b)) -
                                     commutator(H(a), G(b)) * H(a));
            for (int c = b + 1; c <= n; ++c) {
                sys.hypotheses.push_back(G(c) * G(b) * commutator(G(a), H(c)) -
                                         commutator(H(a), G(c)) * G(b) * G(a));
                sys.hypotheses.push_back(H(c) * H(b) * commutator(H(a), G(c)) -
                                         commutator(H(a), G(c)) * H(b) * H(a));
            }
        }
    push_inverse_relations(sys);
    for (const IndexSubset& s : IndexSubset::of_cardinality(n, 2, n))
        sys.goals.push_back({"[prod_g,prod_h],S=" + s.str(),
                             commutator(atom_product(A, GenKind::g, s),
                                        atom_product(A, GenKind::h, s))});
    sys.finalize();
    return sys;
}

RelationSystem build_paired_factors(const BuildParams& p) {
    int bound = default_bound(8, p);
    AlphabetPtr alph = share(Alphabet::u_only(8));
    auto lin = [&](SeriesVar var, int ui) {
        return series_from_spec(SeriesSpec::linear(var, u(uint16_t(ui))), alph, bound);
    };
    std::vector<CentralPoly> gs, hs;
    for (int i = 1; i <= 4; ++i) {
        gs.push_back(lin(SeriesVar::x, 2 * i) * lin(SeriesVar::x, 2 * i - 1));
        hs.push_back(lin(SeriesVar::y, 2 * i) * lin(SeriesVar::y, 2 * i - 1));
    }
    RelationSystem sys = decompose_commutation(gs, hs, 3, /*allow_truncation=*/true,
                                               "paired_factors");
    sys.degree_bound = bound;
    return sys;
}

RelationSystem build_pattern_word(const BuildParams& p) {
    if (p.pattern.size() != 8 ||
        p.pattern.find_first_not_of("xy") != std::string::npos)
        throw std::invalid_argument("pattern_word needs an 8-letter word over {x,y}");
    int n = 4;
    int bound = default_bound(2 * n, p);
    AlphabetPtr alph = share(Alphabet::uv(uint16_t(n)));
    auto var = [&](char c) { return c == 'x' ? SeriesVar::x : SeriesVar::y; };
    std::vector<CentralPoly> gs, hs;
    for (int i = 0; i < n; ++i) {
        gs.push_back(series_from_spec(SeriesSpec::linear(var(p.pattern[size_t(i)]), u(uint16_t(i + 1))),
                                      alph, bound));
        hs.push_back(series_from_spec(
            SeriesSpec::linear(var(p.pattern[size_t(i + 4)]), v(uint16_t(i + 1))), alph, bound));
    }
    RelationSystem sys = decompose_commutation(gs, hs, 3, false, "pattern_word(" + p.pattern + ")");
    sys.degree_bound = bound;
    return sys;
}

RelationSystem build_e1e2_remark(const BuildParams& p) {
    int n = 3;
    int bound = default_bound(8, p);
    AlphabetPtr alph = share(Alphabet::uv(3));
    std::vector<CentralPoly> gs, hs;
    for (int i = 1; i <= n; ++i) {
        SeriesSpec sg = SeriesSpec::powers(SeriesVar::x, u(uint16_t(i)),
                                           {Rational(0), Rational(0), Rational(1), Rational(1),
                                            Rational(1)});
        gs.push_back(series_from_spec(sg, alph, bound));
        hs.push_back(series_from_spec(SeriesSpec::linear(SeriesVar::y, v(uint16_t(i))), alph, bound));
    }
    RelationSystem sys = decompose_commutation(gs, hs, 3, /*allow_truncation=*/true, "e1e2_remark");
    sys.degree_bound = bound;
    sys.goals.clear();
    // goal: [h3 + h2 + h1, g3 g2 + g3 g1 + g2 g1], bidegree by bidegree
    CentralPoly hsum = hs[2] + hs[1] + hs[0];
    CentralPoly gpairs = gs[2] * gs[1] + gs[2] * gs[0] + gs[1] * gs[0];
    CentralPoly goal = hsum * gpairs - gpairs * hsum;
    for (const auto& [d, poly] : goal.coeffs()) {
        std::ostringstream os;
        os << "e1e2,deg=(" << d.x << "," << d.y << ")";
        sys.goals.push_back({os.str(), poly});
    }
    sys.finalize();
    return sys;
}

RelationSystem build_rule_of_k(int n, const BuildParams& p) {
    int k = p.k;
    if (k < 1) throw std::invalid_argument("rule_of_k needs k >= 1");
    if (n <= k) n = k + 1;
    int bound = default_bound(2 * n, p);
    AlphabetPtr alph = share(Alphabet::uv(uint16_t(n)));
    std::vector<CentralPoly> gs, hs;
    for (int i = 1; i <= n; ++i) {
        gs.push_back(series_from_spec(SeriesSpec::linear(SeriesVar::x, u(uint16_t(i))), alph, bound));
        hs.push_back(series_from_spec(SeriesSpec::linear(SeriesVar::x, v(uint16_t(i))), alph, bound));
    }
    RelationSystem sys = decompose_commutation(gs, hs, k, false,
                                               "rule_of_k(k=" + std::to_string(k) +
                                                   ",N=" + std::to_string(n) + ")");
    sys.degree_bound = bound;
    return sys;
}

RelationSystem build_prod_vs_elem(int n, const BuildParams& p, int ell_cap, const char* tagname) {
    RelationSystem sys;
    sys.name = std::string(tagname) + "(N=" + std::to_string(n) + ")";
    Alphabet base = Alphabet::gv(uint16_t(n));
    std::vector<Gen> invertible;
    if (p.adjoin_inverses)
        for (int i = 1; i <= n; ++i) invertible.push_back(g(uint16_t(i)));
    sys.alphabet = share(base.with_inverses(invertible));
    sys.degree_bound = default_bound(8, p);
    auto add = [&](const IndexSubset& s, bool as_goal) {
        int top = std::min<int>(ell_cap, int(s.size()));
        for (int l = 1; l <= top; ++l) {
            FreePoly q = commutator(atom_product(sys.alphabet, GenKind::g, s),
                                    elem(l, s, VarFamily::v, sys.alphabet));
            if (q.is_zero()) continue;
            if (as_goal)
                sys.goals.push_back({"S=" + s.str() + ",l=" + std::to_string(l), q});
            else
                sys.hypotheses.push_back(q);
        }
    };
    for (const IndexSubset& s : IndexSubset::of_cardinality(n, 1, 3)) add(s, false);
    push_inverse_relations(sys);
    for (const IndexSubset& s : IndexSubset::of_cardinality(n, 4, n)) add(s, true);
    sys.finalize();
    return sys;
}

} // namespace

RelationSystem decompose_commutation(const std::vector<CentralPoly>& g,
                                     const std::vector<CentralPoly>& h, int max_card,
                                     bool allow_truncation, const std::string& name) {
    if (g.empty() || g.size() != h.size())
        throw std::invalid_argument("decompose_commutation: need equal nonempty factor lists");
    int n = int(g.size());
    if (max_card > n) throw std::invalid_argument("decompose_commutation: max_card above N");
    int bound = g.front().bound();
    const AlphabetPtr& alph = g.front().alphabet();
    for (const std::vector<CentralPoly>* fam : {&g, &h})
        for (const CentralPoly& f : *fam) {
            require_same_alphabet(alph, f.alphabet(), "decompose_commutation");
            if (f.bound() != bound)
                throw std::invalid_argument("decompose_commutation: bound mismatch");
        }
    if (!allow_truncation) {
        // full [g_S, h_S] for S = {1..N} has total degree at most this
        int required = 0;
        bool finite = true;
        for (const std::vector<CentralPoly>* fam : {&g, &h})
            for (const CentralPoly& f : *fam) {
                int top = f.top_total_degree();
                if (top >= bound) finite = false; // likely truncated already
                required += std::max(top, 0);
            }
        if (finite && required > bound)
            throw std::invalid_argument("decompose_commutation: bound " + std::to_string(bound) +
                                        " too small to contain the largest commutator; need " +
                                        std::to_string(required));
    }

    RelationSystem sys;
    sys.name = name;
    sys.alphabet = alph;
    sys.degree_bound = bound;
    for (const IndexSubset& s : IndexSubset::of_cardinality(n, 1, n)) {
        CentralPoly gs = product_over_subset(g, s);
        CentralPoly hs = product_over_subset(h, s);
        CentralPoly c = gs * hs - hs * gs;
        push_components(c, s, int(s.size()) > max_card, sys);
    }
    sys.finalize();
    return sys;
}

RelationSystem build(const std::string& tag, int n, const BuildParams& params) {
    if (tag == "elem_rot") return build_elem_rot(n, params);
    if (tag == "elem_rot_single") return build_elem_rot_single(n, params);
    if (tag == "super_rot") return build_super_rot(n, params);
    if (tag == "half_rot") return build_half_rot(n, params);
    if (tag == "linear_strengthened") return build_linear_strengthened(n, params);
    if (tag == "master_criterion") return build_master_criterion(n, params);
    if (tag == "paired_factors") return build_paired_factors(params);
    if (tag == "pattern_word") return build_pattern_word(params);
    if (tag == "e1e2_remark") return build_e1e2_remark(params);
    if (tag == "rule_of_k") return build_rule_of_k(n, params);
    if (tag == "quadratic_rot") return build_prod_vs_elem(n, params, 2, "quadratic_rot");
    if (tag == "rotv2") return build_prod_vs_elem(n, params, 1 << 20, "rotv2");
    throw std::invalid_argument("unknown relation-system tag '" + tag + "'");
}

std::vector<std::string> supported_tags() {
    return {"elem_rot",      "elem_rot_single", "super_rot",    "half_rot",
            "linear_strengthened", "master_criterion", "paired_factors", "pattern_word",
            "e1e2_remark",   "rule_of_k",       "quadratic_rot", "rotv2"};
}

} // namespace rotlab
