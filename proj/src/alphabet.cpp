#include "rotlab/alphabet.hpp"

#include <algorithm>
#include <sstream>

namespace rotlab {

std::string Gen::name() const {
    static const char* tags = "uvgh";
    std::string s;
    if (kind() == GenKind::aux)
        s = "z";
    else
        s = std::string(1, tags[int(kind())]);
    s += std::to_string(index());
    if (is_inverse()) s += "^-1";
    return s;
}

Gen Gen::parse(const std::string& token) {
    if (token.empty()) throw std::invalid_argument("empty generator token");
    GenKind k;
    switch (token[0]) {
        case 'u': k = GenKind::u; break;
        case 'v': k = GenKind::v; break;
        case 'g': k = GenKind::g; break;
        case 'h': k = GenKind::h; break;
        case 'z': k = GenKind::aux; break;
        default: throw std::invalid_argument("bad generator token: '" + token + "'");
    }
    size_t pos = 1;
    size_t digits = 0;
    while (pos + digits < token.size() && isdigit(token[pos + digits])) ++digits;
    if (digits == 0) throw std::invalid_argument("bad generator token: '" + token + "'");
    int idx = std::stoi(token.substr(pos, digits));
    pos += digits;
    bool inv = false;
    if (pos < token.size()) {
        if (token.substr(pos) == "^-1")
            inv = true;
        else
            throw std::invalid_argument("bad generator token: '" + token + "'");
    }
    return Gen(k, uint16_t(idx), inv);
}

Alphabet::Alphabet(std::vector<Gen> gens) : gens_(std::move(gens)) {
    std::sort(gens_.begin(), gens_.end());
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
}

Alphabet Alphabet::uv(uint16_t m) {
    std::vector<Gen> gs;
    for (uint16_t i = 1; i <= m; ++i) gs.push_back(u(i));
    for (uint16_t i = 1; i <= m; ++i) gs.push_back(v(i));
    return Alphabet(std::move(gs));
}

Alphabet Alphabet::u_only(uint16_t m) {
    std::vector<Gen> gs;
    for (uint16_t i = 1; i <= m; ++i) gs.push_back(u(i));
    return Alphabet(std::move(gs));
}

Alphabet Alphabet::gh(uint16_t n) {
    std::vector<Gen> gs;
    for (uint16_t i = 1; i <= n; ++i) gs.push_back(g(i));
    for (uint16_t i = 1; i <= n; ++i) gs.push_back(h(i));
    return Alphabet(std::move(gs));
}

Alphabet Alphabet::gv(uint16_t n) {
    std::vector<Gen> gs;
    for (uint16_t i = 1; i <= n; ++i) gs.push_back(g(i));
    for (uint16_t i = 1; i <= n; ++i) gs.push_back(v(i));
    return Alphabet(std::move(gs));
}

Alphabet Alphabet::with_inverses(const std::vector<Gen>& invertible) const {
    std::vector<Gen> gs = gens_;
    for (Gen x : invertible) {
        if (!contains(x))
            throw std::invalid_argument("cannot invert " + x.name() + ": not in alphabet");
        gs.push_back(x.inverse_symbol());
    }
    return Alphabet(std::move(gs));
}

Alphabet Alphabet::with_extra(const std::vector<Gen>& extra) const {
    std::vector<Gen> gs = gens_;
    gs.insert(gs.end(), extra.begin(), extra.end());
    return Alphabet(std::move(gs));
}

bool Alphabet::contains(Gen x) const {
    return std::binary_search(gens_.begin(), gens_.end(), x);
}

std::vector<Gen> Alphabet::inverted_bases() const {
    std::vector<Gen> out;
    for (Gen x : gens_)
        if (x.is_inverse() && contains(x.base_symbol())) out.push_back(x.base_symbol());
    return out;
}

std::string Alphabet::describe() const {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (i) os << ",";
        os << gens_[i].name();
    }
    os << "}";
    return os.str();
}

void require_same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b, const char* op) {
    if (a == b) return;
    if (a && b && *a == *b) return;
    std::string lhs = a ? a->describe() : "<none>";
    std::string rhs = b ? b->describe() : "<none>";
    throw std::invalid_argument(std::string(op) + ": alphabet mismatch " + lhs + " vs " + rhs);
}

} // namespace rotlab
