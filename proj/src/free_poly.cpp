#include "rotlab/free_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rotlab {

namespace {
struct DeglexGreater {
    bool operator()(const Word& a, const Word& b) const { return deglex_less(b, a); }
};

void check_word(const AlphabetPtr& a, const Word& w) {
    for (Gen x : w.letters())
        if (!a->contains(x))
            throw std::invalid_argument("generator " + x.name() + " not in alphabet " + a->describe());
}
} // namespace

FreePoly FreePoly::gen(AlphabetPtr a, Gen x) {
    return term(std::move(a), Rational(1), Word{x});
}

FreePoly FreePoly::term(AlphabetPtr a, Rational c, const Word& w) {
    FreePoly p(std::move(a));
    check_word(p.alphabet_, w);
    if (!c.is_zero()) p.terms_.emplace_back(w, std::move(c));
    return p;
}

FreePoly FreePoly::from_terms(AlphabetPtr a, std::vector<Term> unsorted) {
    std::map<Word, Rational, DeglexGreater> acc;
    for (auto& [w, c] : unsorted) {
        check_word(a, w);
        auto it = acc.find(w);
        if (it == acc.end())
            acc.emplace(w, std::move(c));
        else
            it->second += c;
    }
    FreePoly p(std::move(a));
    for (auto& [w, c] : acc)
        if (!c.is_zero()) p.terms_.emplace_back(w, c);
    return p;
}

bool FreePoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    size_t d = terms_.front().first.degree();
    for (const auto& [w, c] : terms_)
        if (w.degree() != d) return false;
    return true;
}

Rational FreePoly::coeff_of(const Word& w) const {
    for (const auto& [tw, c] : terms_)
        if (tw == w) return c;
    return Rational(0);
}

FreePoly FreePoly::operator-() const {
    FreePoly p(alphabet_);
    p.terms_.reserve(terms_.size());
    for (const auto& [w, c] : terms_) p.terms_.emplace_back(w, -c);
    return p;
}

FreePoly FreePoly::scaled(const Rational& c) const {
    FreePoly p(alphabet_);
    if (c.is_zero()) return p;
    p.terms_.reserve(terms_.size());
    for (const auto& [w, k] : terms_) p.terms_.emplace_back(w, k * c);
    return p;
}

FreePoly operator+(const FreePoly& a, const FreePoly& b) {
    require_same_alphabet(a.alphabet_, b.alphabet_, "poly_add");
    FreePoly out(a.alphabet_);
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
        const Word& wa = a.terms_[i].first;
        const Word& wb = b.terms_[j].first;
        if (wa == wb) {
            Rational c = a.terms_[i].second + b.terms_[j].second;
            if (!c.is_zero()) out.terms_.emplace_back(wa, std::move(c));
            ++i; ++j;
        } else if (deglex_less(wb, wa)) {
            out.terms_.push_back(a.terms_[i++]);
        } else {
            out.terms_.push_back(b.terms_[j++]);
        }
    }
    for (; i < a.terms_.size(); ++i) out.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) out.terms_.push_back(b.terms_[j]);
    return out;
}

FreePoly operator-(const FreePoly& a, const FreePoly& b) { return a + (-b); }

FreePoly operator*(const FreePoly& a, const FreePoly& b) {
    require_same_alphabet(a.alphabet_, b.alphabet_, "poly_mul");
    std::map<Word, Rational, DeglexGreater> acc;
    for (const auto& [wa, ca] : a.terms_) {
        for (const auto& [wb, cb] : b.terms_) {
            Word w = wa.concat(wb);
            auto it = acc.find(w);
            if (it == acc.end())
                acc.emplace(std::move(w), ca * cb);
            else
                it->second += ca * cb;
        }
    }
    FreePoly out(a.alphabet_);
    for (auto& [w, c] : acc)
        if (!c.is_zero()) out.terms_.emplace_back(w, c);
    return out;
}

bool operator==(const FreePoly& a, const FreePoly& b) {
    require_same_alphabet(a.alphabet_, b.alphabet_, "poly_eq");
    return a.terms_ == b.terms_;
}

std::string FreePoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "- ";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (a.is_one())
            os << w.str();
        else
            os << a.str() << " * " << w.str();
    }
    return os.str();
}

FreePoly commutator(const FreePoly& a, const FreePoly& b) { return a * b - b * a; }

FreePoly sum(const std::vector<FreePoly>& ps) {
    if (ps.empty()) throw std::invalid_argument("sum of empty list");
    FreePoly out = ps.front();
    for (size_t i = 1; i < ps.size(); ++i) out += ps[i];
    return out;
}

FreePoly product(const std::vector<FreePoly>& ps) {
    if (ps.empty()) throw std::invalid_argument("product of empty list");
    FreePoly out = ps.front();
    for (size_t i = 1; i < ps.size(); ++i) out *= ps[i];
    return out;
}

} // namespace rotlab
