#pragma once

#include "rotlab/rational.hpp"
#include "rotlab/word.hpp"

#include <map>
#include <utility>
#include <vector>

namespace rotlab {

/// Element of the free associative unital algebra over the rationals:
/// a linear combination of words with nonzero coefficients, kept sorted
/// by descending deglex so equality is structural and the leading term
/// is terms().front(). Immutable in use: all operations return values.
class FreePoly {
public:
    using Term = std::pair<Word, Rational>;

    explicit FreePoly(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

    static FreePoly zero(AlphabetPtr a) { return FreePoly(std::move(a)); }
    static FreePoly one(AlphabetPtr a) { return term(std::move(a), Rational(1), Word::one()); }
    static FreePoly gen(AlphabetPtr a, Gen x);
    static FreePoly word(AlphabetPtr a, const Word& w) { return term(std::move(a), Rational(1), w); }
    static FreePoly term(AlphabetPtr a, Rational c, const Word& w);
    static FreePoly scalar(AlphabetPtr a, Rational c) { return term(std::move(a), std::move(c), Word::one()); }
    static FreePoly from_terms(AlphabetPtr a, std::vector<Term> unsorted);

    const AlphabetPtr& alphabet() const { return alphabet_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    /// Degree of the leading word; degree of the zero polynomial is -1.
    long degree() const { return terms_.empty() ? -1 : long(terms_.front().first.degree()); }
    bool is_homogeneous() const;

    const Word& leading_word() const { return terms_.front().first; }
    const Rational& leading_coeff() const { return terms_.front().second; }

    Rational coeff_of(const Word& w) const;

    FreePoly operator-() const;
    FreePoly scaled(const Rational& c) const;

    friend FreePoly operator+(const FreePoly& a, const FreePoly& b);
    friend FreePoly operator-(const FreePoly& a, const FreePoly& b);
    friend FreePoly operator*(const FreePoly& a, const FreePoly& b);

    FreePoly& operator+=(const FreePoly& o) { *this = *this + o; return *this; }
    FreePoly& operator-=(const FreePoly& o) { *this = *this - o; return *this; }
    FreePoly& operator*=(const FreePoly& o) { *this = *this * o; return *this; }

    friend bool operator==(const FreePoly& a, const FreePoly& b);
    friend bool operator!=(const FreePoly& a, const FreePoly& b) { return !(a == b); }

    std::string str() const;

private:
    AlphabetPtr alphabet_;
    std::vector<Term> terms_; // descending deglex, no zero coefficients
};

/// poly_mul per contract: exact, bilinear, word-concatenating. Same as
/// operator* but with the contract name.
inline FreePoly poly_mul(const FreePoly& a, const FreePoly& b) { return a * b; }

/// [a,b] = ab - ba
FreePoly commutator(const FreePoly& a, const FreePoly& b);

FreePoly sum(const std::vector<FreePoly>& ps);
FreePoly product(const std::vector<FreePoly>& ps);

} // namespace rotlab
