#include "rotlab/word.hpp"

namespace rotlab {

std::optional<size_t> Word::find_factor(const Word& factor) const {
    const size_t n = letters_.size(), m = factor.letters_.size();
    if (m > n) return std::nullopt;
    for (size_t i = 0; i + m <= n; ++i) {
        bool ok = true;
        for (size_t j = 0; j < m; ++j)
            if (letters_[i + j] != factor.letters_[j]) { ok = false; break; }
        if (ok) return i;
    }
    return std::nullopt;
}

std::string Word::str() const {
    if (letters_.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < letters_.size(); ++i) {
        if (i) s += ".";
        s += letters_[i].name();
    }
    return s;
}

bool deglex_less(const Word& a, const Word& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const auto& xs = a.letters();
    const auto& ys = b.letters();
    for (size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] != ys[i]) return xs[i] < ys[i];
    }
    return false;
}

} // namespace rotlab
