#include "rotlab/identities.hpp"

#include <stdexcept>

namespace rotlab {

FreePoly NamedIdentity::left() const { return sum(left_summands); }
FreePoly NamedIdentity::right() const { return sum(right_summands); }

namespace {

struct Atoms {
    AlphabetPtr A;
    FreePoly ga, gb, gc, ha, hb, hc, va, vb, vc, hbi, zz;

    explicit Atoms(AlphabetPtr alph)
        : A(alph), ga(FreePoly::gen(A, g(1))), gb(FreePoly::gen(A, g(2))),
          gc(FreePoly::gen(A, g(3))), ha(FreePoly::gen(A, h(1))), hb(FreePoly::gen(A, h(2))),
          hc(FreePoly::gen(A, h(3))), va(A), vb(A), vc(A), hbi(A), zz(A) {}
};

// g/h triples with optional extras; indices a,b,c -> 1,2,3
Atoms make_atoms(bool with_v, bool with_hb_inverse, bool with_z) {
    std::vector<Gen> gens;
    for (uint16_t i = 1; i <= 3; ++i) gens.push_back(g(i));
    for (uint16_t i = 1; i <= 3; ++i) gens.push_back(h(i));
    if (with_v)
        for (uint16_t i = 1; i <= 3; ++i) gens.push_back(v(i));
    if (with_hb_inverse) gens.push_back(h(2).inverse_symbol());
    if (with_z) gens.push_back(z(1));
    Atoms at(share(Alphabet(gens)));
    if (with_v) {
        at.va = FreePoly::gen(at.A, v(1));
        at.vb = FreePoly::gen(at.A, v(2));
        at.vc = FreePoly::gen(at.A, v(3));
    }
    if (with_hb_inverse) at.hbi = FreePoly::gen(at.A, h(2).inverse_symbol());
    if (with_z) at.zz = FreePoly::gen(at.A, z(1));
    return at;
}

NamedIdentity make_deg1_super_1() {
    Atoms t = make_atoms(true, false, false);
    NamedIdentity id;
    id.tag = "deg1_super_1";
    id.alphabet = t.A;
    id.left_summands = {commutator(t.va, t.gb) * t.ga, -(t.gb * commutator(t.ga, t.vb))};
    id.right_summands = {commutator(t.vb + t.va, t.gb * t.ga), -(t.gb * commutator(t.va, t.ga)),
                         -(commutator(t.vb, t.gb) * t.ga)};
    return id;
}

NamedIdentity make_deg1_super_2() {
    Atoms t = make_atoms(true, false, false);
    NamedIdentity id;
    id.tag = "deg1_super_2";
    id.alphabet = t.A;
    id.left_summands = {commutator(t.va, t.gc) * t.gb * t.ga,
                        -(t.gc * t.gb * commutator(t.ga, t.vc))};
    id.right_summands = {commutator(t.vc + t.vb + t.va, t.gc * t.gb * t.ga),
                         -(t.gc * commutator(t.vb + t.va, t.gb * t.ga)),
                         -(commutator(t.vc + t.vb, t.gc * t.gb) * t.ga),
                         t.gc * commutator(t.vb, t.gb) * t.ga};
    return id;
}

// shared tail of the commutator expansion used by the three h_b^{-1} identities
std::vector<FreePoly> cba_tail(const Atoms& t) {
    return {commutator(t.gc * t.gb, t.hc * t.hb) * t.hbi * t.ga * t.hb * t.ha,
            t.hc * t.hb * t.gc * t.hbi * commutator(t.gb * t.ga, t.hb * t.ha),
            -(t.hc * t.hb * t.gc * t.hbi * commutator(t.gb, t.hb) * t.hbi * t.ga * t.hb * t.ha)};
}

NamedIdentity make_cba_CBA() {
    Atoms t = make_atoms(false, true, false);
    NamedIdentity id;
    id.tag = "cba_CBA";
    id.alphabet = t.A;
    id.left_summands = {commutator(t.gc * t.gb * t.ga, t.hc * t.hb * t.ha)};
    id.right_summands = {t.gc * t.gb * commutator(t.ga, t.hc) * t.hb * t.ha,
                         -(t.hc * t.hb * commutator(t.ha, t.gc) * t.gb * t.ga)};
    for (FreePoly& s : cba_tail(t)) id.right_summands.push_back(std::move(s));
    return id;
}

NamedIdentity make_strong_commute() {
    Atoms t = make_atoms(false, true, false);
    NamedIdentity id;
    id.tag = "strong_commute";
    id.alphabet = t.A;
    id.left_summands = {commutator(t.gc * t.gb * t.ga, t.hc * t.hb * t.ha)};
    id.right_summands = {t.gc * t.gb * commutator(t.ga, t.hc) * t.hb * t.ha,
                         -(commutator(t.ha, t.gc) * t.gb * t.ga * t.hb * t.ha),
                         -(t.hc * t.hb * commutator(t.ha, t.gc) * t.gb * t.ga),
                         commutator(t.ha, t.gc) * t.hb * t.ha * t.gb * t.ga,
                         commutator(t.ha, t.gc) * commutator(t.gb * t.ga, t.hb * t.ha)};
    for (FreePoly& s : cba_tail(t)) id.right_summands.push_back(std::move(s));
    return id;
}

NamedIdentity make_strong_commute_z() {
    Atoms t = make_atoms(false, true, true);
    NamedIdentity id;
    id.tag = "strong_commute_z";
    id.alphabet = t.A;
    id.left_summands = {commutator(t.gc * t.gb * t.ga, t.hc * t.hb * t.ha)};
    id.right_summands = {t.gc * t.gb * commutator(t.ga, t.hc) * t.hb * t.ha,
                         -(t.zz * t.gb * t.ga * t.hb * t.ha),
                         -(t.hc * t.hb * commutator(t.ha, t.gc) * t.gb * t.ga),
                         t.zz * t.hb * t.ha * t.gb * t.ga,
                         t.zz * commutator(t.gb * t.ga, t.hb * t.ha)};
    for (FreePoly& s : cba_tail(t)) id.right_summands.push_back(std::move(s));
    return id;
}

// the double Leibniz expansion of [v4+v3+v2+v1, g4 g3 g2 g1]
NamedIdentity make_half_rot_telescope() {
    std::vector<Gen> gens;
    for (uint16_t i = 1; i <= 4; ++i) gens.push_back(g(i));
    for (uint16_t i = 1; i <= 4; ++i) gens.push_back(v(i));
    AlphabetPtr A = share(Alphabet(gens));
    auto G = [&](int i) { return FreePoly::gen(A, g(uint16_t(i))); };
    auto V = [&](int i) { return FreePoly::gen(A, v(uint16_t(i))); };
    NamedIdentity id;
    id.tag = "half_rot_telescope";
    id.alphabet = A;
    id.left_summands = {commutator(V(4) + V(3) + V(2) + V(1), G(4) * G(3) * G(2) * G(1))};
    id.right_summands = {
        commutator(V(4) + V(3) + V(2), G(4) * G(3) * G(2)) * G(1),
        G(4) * G(3) * G(2) * commutator(V(4) + V(3) + V(2), G(1)),
        commutator(V(3) + V(2) + V(1), G(4)) * G(3) * G(2) * G(1),
        G(4) * commutator(V(3) + V(2) + V(1), G(3) * G(2) * G(1)),
        -(commutator(V(3) + V(2), G(4)) * G(3) * G(2) * G(1)),
        -(G(4) * commutator(V(3) + V(2), G(3) * G(2)) * G(1)),
        -(G(4) * G(3) * G(2) * commutator(V(3) + V(2), G(1)))};
    return id;
}

} // namespace

const std::vector<NamedIdentity>& named_identities() {
    static const std::vector<NamedIdentity> all = {
        make_deg1_super_1(),  make_deg1_super_2(),     make_cba_CBA(),
        make_strong_commute(), make_strong_commute_z(), make_half_rot_telescope()};
    return all;
}

const NamedIdentity& identity(const std::string& tag) {
    for (const NamedIdentity& id : named_identities())
        if (id.tag == tag) return id;
    throw std::invalid_argument("unknown identity tag '" + tag + "'");
}

VerifyResult verify(const NamedIdentity& id) {
    return VerifyResult(inverse_normal_form(id.left() - id.right()));
}

VerifyResult verify(const std::string& tag) { return verify(identity(tag)); }

size_t summand_count(const NamedIdentity& id) {
    return id.left_summands.size() + id.right_summands.size();
}

VerifyResult verify_with_flipped_sign(const NamedIdentity& id, size_t summand_index) {
    NamedIdentity copy = id;
    if (summand_index < copy.left_summands.size())
        copy.left_summands[summand_index] = -copy.left_summands[summand_index];
    else {
        size_t j = summand_index - copy.left_summands.size();
        if (j >= copy.right_summands.size())
            throw std::out_of_range("summand index out of range");
        copy.right_summands[j] = -copy.right_summands[j];
    }
    return verify(copy);
}

Verdict check_l_for_super(int m, int bound, bool include_first_hypothesis) {
    if (m < 3 || m > 5) throw std::invalid_argument("check_l_for_super: need 3 <= m <= 5");
    if (bound < m + 2)
        throw std::invalid_argument("check_l_for_super: bound below " + std::to_string(m + 2) +
                                    ", conclusion cannot be expressed");
    std::vector<Gen> gens;
    for (uint16_t i = 1; i <= uint16_t(m); ++i) gens.push_back(g(i));
    gens.push_back(z(1));
    gens.push_back(z(2));
    Alphabet base(std::move(gens));
    Alphabet full = base.with_inverses({g(1), g(uint16_t(m))});
    AlphabetPtr A = share(full);
    auto G = [&](int i) { return FreePoly::gen(A, g(uint16_t(i))); };
    FreePoly zz = FreePoly::gen(A, z(1));
    FreePoly zp = FreePoly::gen(A, z(2));
    std::vector<FreePoly> hyps;
    if (include_first_hypothesis) hyps.push_back(zz * G(1) - G(m) * zp);
    for (int b = 2; b < m; ++b) hyps.push_back(zz * G(b) * G(1) - G(m) * G(b) * zp);
    FreePoly one = FreePoly::one(A);
    for (Gen bgen : {g(1), g(uint16_t(m))}) {
        Gen bi = bgen.inverse_symbol();
        hyps.push_back(FreePoly::word(A, Word{bgen, bi}) - one);
        hyps.push_back(FreePoly::word(A, Word{bi, bgen}) - one);
    }
    FreePoly lhs = zz, rhs = G(m);
    for (int i = m - 1; i >= 1; --i) lhs *= G(i);
    for (int i = m - 1; i >= 2; --i) rhs *= G(i);
    rhs *= zp;
    GroebnerBasis gb = complete(hyps, MonomialOrder::deglex_default(*A), bound, {},
                                "l_for_super(m=" + std::to_string(m) + ")");
    return gb.membership(lhs - rhs);
}

} // namespace rotlab
