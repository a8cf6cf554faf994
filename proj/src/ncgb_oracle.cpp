#include "rotlab/ncgb_oracle.hpp"

#include <map>
#include <stdexcept>

namespace rotlab {

namespace {

struct DeglexGreater {
    bool operator()(const Word& a, const Word& b) const { return deglex_less(b, a); }
};

using Row = std::map<Word, Rational, DeglexGreater>;

Row to_row(const FreePoly& p) {
    Row r;
    for (const auto& [w, c] : p.terms()) r.emplace(w, c);
    return r;
}

// reduce r against the pivot rows (pivot = leading word, rows monic)
void reduce_row(Row& r, const std::map<Word, Row, DeglexGreater>& pivots) {
    bool again = true;
    while (again && !r.empty()) {
        again = false;
        auto it = pivots.find(r.begin()->first);
        if (it != pivots.end()) {
            Rational c = r.begin()->second;
            for (const auto& [w, k] : it->second) {
                auto jt = r.find(w);
                if (jt == r.end()) {
                    r.emplace(w, -(c * k));
                } else {
                    jt->second -= c * k;
                    if (jt->second.is_zero()) r.erase(jt);
                }
            }
            again = true;
        }
    }
}

void insert_row(Row r, std::map<Word, Row, DeglexGreater>& pivots) {
    reduce_row(r, pivots);
    if (r.empty()) return;
    Rational inv = r.begin()->second.inverse();
    for (auto& [w, c] : r) c *= inv;
    Word lead = r.begin()->first;
    pivots.emplace(std::move(lead), std::move(r));
}

void all_words(const Alphabet& alph, int max_deg, std::vector<Word>& out) {
    out.push_back(Word::one());
    size_t level_start = 0;
    for (int d = 1; d <= max_deg; ++d) {
        size_t level_end = out.size();
        for (size_t i = level_start; i < level_end; ++i)
            for (Gen x : alph.generators()) out.push_back(out[i].concat(Word{x}));
        level_start = level_end;
    }
}

} // namespace

bool oracle_in_span(const FreePoly& q, const std::vector<FreePoly>& generators, int bound) {
    if (q.is_zero()) return true;
    if (q.degree() > bound)
        throw std::invalid_argument("oracle: query degree above bound");
    const Alphabet& alph = *q.alphabet();

    std::map<Word, Row, DeglexGreater> pivots;
    std::vector<Word> words;
    all_words(alph, bound, words);

    for (const FreePoly& gen : generators) {
        require_same_alphabet(q.alphabet(), gen.alphabet(), "oracle");
        long dg = gen.degree();
        if (dg < 0) continue;
        for (const Word& a : words) {
            if (long(a.degree()) + dg > bound) continue;
            for (const Word& b : words) {
                if (long(a.degree() + b.degree()) + dg > bound) continue;
                FreePoly l = FreePoly::word(q.alphabet(), a);
                FreePoly r = FreePoly::word(q.alphabet(), b);
                insert_row(to_row(l * gen * r), pivots);
            }
        }
    }

    Row target = to_row(q);
    reduce_row(target, pivots);
    return target.empty();
}

} // namespace rotlab
