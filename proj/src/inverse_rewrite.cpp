#include "rotlab/inverse_rewrite.hpp"

namespace rotlab {

std::vector<InversePair> inverse_pairs_of(const Alphabet& alphabet) {
    std::vector<InversePair> out;
    for (Gen b : alphabet.inverted_bases()) out.push_back({b, b.inverse_symbol()});
    return out;
}

namespace {
bool cancels(Gen a, Gen b, const Alphabet& alph) {
    // a.b -> 1 iff b is a's adjoined inverse or vice versa
    if (a.kind() != b.kind() || a.index() != b.index()) return false;
    if (a.is_inverse() == b.is_inverse()) return false;
    return alph.contains(a) && alph.contains(b);
}
} // namespace

Word inverse_normal_form(const Word& w, const Alphabet& alphabet) {
    std::vector<Gen> stack;
    for (Gen x : w.letters()) {
        if (!stack.empty() && cancels(stack.back(), x, alphabet))
            stack.pop_back();
        else
            stack.push_back(x);
    }
    return Word(std::move(stack));
}

FreePoly inverse_normal_form(const FreePoly& p) {
    std::vector<FreePoly::Term> ts;
    ts.reserve(p.term_count());
    for (const auto& [w, c] : p.terms())
        ts.emplace_back(inverse_normal_form(w, *p.alphabet()), c);
    return FreePoly::from_terms(p.alphabet(), std::move(ts));
}

bool inverse_rules_confluent(const Alphabet& alphabet) {
    // Rules are l -> 1 with |l| = 2. Overlaps: suffix of one lhs equals a
    // prefix of another, giving a 3-letter word reducible in two ways.
    std::vector<Word> lhss;
    for (const InversePair& ip : inverse_pairs_of(alphabet)) {
        lhss.push_back(Word{ip.base, ip.inverse});
        lhss.push_back(Word{ip.inverse, ip.base});
    }
    for (const Word& l1 : lhss) {
        for (const Word& l2 : lhss) {
            if (l1.at(1) != l2.at(0)) continue;
            Word overlap{l1.at(0), l1.at(1), l2.at(1)};
            // reduce the left pair vs. the right pair first
            Word left_first{overlap.at(2)};
            Word right_first{overlap.at(0)};
            if (inverse_normal_form(left_first, alphabet) !=
                inverse_normal_form(right_first, alphabet))
                return false;
        }
    }
    return true;
}

} // namespace rotlab
