#include "rotlab/derivation.hpp"

#include <stdexcept>

namespace rotlab {

FreePoly derive(const Derivation& d, const FreePoly& p) {
    require_same_alphabet(d.alphabet, p.alphabet(), "derive");
    FreePoly out = FreePoly::zero(p.alphabet());
    for (const auto& [w, c] : p.terms()) {
        // d(x1...xn) = sum_i x1...x_{i-1} d(x_i) x_{i+1}...xn
        const auto& ls = w.letters();
        for (size_t i = 0; i < ls.size(); ++i) {
            auto it = d.images.find(ls[i]);
            if (it == d.images.end())
                throw std::invalid_argument("derivation has no image for generator " + ls[i].name());
            FreePoly mid = it->second.scaled(c);
            if (mid.is_zero()) continue;
            FreePoly left = FreePoly::word(p.alphabet(), w.prefix(i));
            FreePoly right = FreePoly::word(p.alphabet(), w.suffix_from(i + 1));
            out += left * mid * right;
        }
    }
    return out;
}

Derivation make_inner_derivation(const FreePoly& a) {
    Derivation d;
    d.alphabet = a.alphabet();
    for (Gen x : a.alphabet()->generators())
        d.images.emplace(x, commutator(a, FreePoly::gen(a.alphabet(), x)));
    return d;
}

} // namespace rotlab
