#pragma once

#include "rotlab/alphabet.hpp"

#include <initializer_list>
#include <optional>
#include <vector>

namespace rotlab {

/// A monomial: finite sequence of generators. The empty word is the unit.
class Word {
public:
    Word() = default;
    Word(std::initializer_list<Gen> ls) : letters_(ls) {}
    explicit Word(std::vector<Gen> ls) : letters_(std::move(ls)) {}

    static Word one() { return Word(); }
    static Word power(Gen x, size_t k) { return Word(std::vector<Gen>(k, x)); }

    size_t degree() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const std::vector<Gen>& letters() const { return letters_; }
    Gen at(size_t i) const { return letters_[i]; }

    Word concat(const Word& o) const {
        std::vector<Gen> ls = letters_;
        ls.insert(ls.end(), o.letters_.begin(), o.letters_.end());
        return Word(std::move(ls));
    }

    Word prefix(size_t n) const {
        return Word(std::vector<Gen>(letters_.begin(), letters_.begin() + n));
    }
    Word suffix_from(size_t i) const {
        return Word(std::vector<Gen>(letters_.begin() + i, letters_.end()));
    }

    /// First position where `factor` occurs as a contiguous subword.
    std::optional<size_t> find_factor(const Word& factor) const;

    friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

    std::string str() const;

private:
    std::vector<Gen> letters_;
};

/// Degree first, then lexicographic by generator code. Multiplicative and
/// a well-order on each degree.
bool deglex_less(const Word& a, const Word& b);

struct DeglexLess {
    bool operator()(const Word& a, const Word& b) const { return deglex_less(a, b); }
};

inline Word operator*(const Word& a, const Word& b) { return a.concat(b); }

} // namespace rotlab
