#include "rotlab/text_io.hpp"

#include <cctype>
#include <stdexcept>

namespace rotlab {

namespace {

struct Cursor {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    void expect(char c) {
        if (!accept(c))
            throw std::invalid_argument("parse error at position " + std::to_string(pos) +
                                        ": expected '" + std::string(1, c) + "' in '" + s + "'");
    }
    std::string take_while(bool (*pred)(char)) {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && pred(s[pos])) ++pos;
        return s.substr(start, pos - start);
    }
};

bool digit_char(char c) { return isdigit(static_cast<unsigned char>(c)) != 0; }
bool gen_char(char c) {
    return isalnum(static_cast<unsigned char>(c)) || c == '^' || c == '-';
}

Rational parse_rational(Cursor& cur) {
    std::string num = cur.take_while(digit_char);
    if (num.empty()) throw std::invalid_argument("expected number in '" + cur.s + "'");
    if (cur.accept('/')) {
        std::string den = cur.take_while(digit_char);
        if (den.empty()) throw std::invalid_argument("expected denominator in '" + cur.s + "'");
        return Rational::from_string(num + "/" + den);
    }
    return Rational::from_string(num);
}

// word := '1' | gen ('.' gen)*
Word parse_word(Cursor& cur) {
    cur.skip_ws();
    if (cur.peek() == '1') {
        cur.expect('1');
        return Word::one();
    }
    std::vector<Gen> letters;
    for (;;) {
        std::string tok = cur.take_while(gen_char);
        if (tok.empty()) throw std::invalid_argument("expected generator in '" + cur.s + "'");
        letters.push_back(Gen::parse(tok));
        if (!cur.accept('.')) break;
    }
    return Word(std::move(letters));
}

// term := [rational '*'] word ; leading '1' is ambiguous between a bare
// coefficient and the unit word, so look ahead for '*' or '/'.
FreePoly parse_term(Cursor& cur, const AlphabetPtr& alphabet, bool negative) {
    Rational c(1);
    cur.skip_ws();
    if (digit_char(cur.peek())) {
        size_t save = cur.pos;
        Rational r = parse_rational(cur);
        if (cur.accept('*')) {
            c = r;
        } else {
            cur.pos = save; // bare '1' unit word (the only legal bare number)
        }
    }
    Word w = parse_word(cur);
    if (negative) c = -c;
    return FreePoly::term(alphabet, c, w);
}

} // namespace

FreePoly parse_free_poly(const std::string& text, const AlphabetPtr& alphabet) {
    Cursor cur{text};
    cur.skip_ws();
    if (cur.peek() == '0') {
        cur.expect('0');
        if (!cur.done()) throw std::invalid_argument("trailing input after '0' in '" + text + "'");
        return FreePoly::zero(alphabet);
    }
    bool neg = cur.accept('-');
    FreePoly out = parse_term(cur, alphabet, neg);
    while (!cur.done()) {
        if (cur.accept('+'))
            out += parse_term(cur, alphabet, false);
        else if (cur.accept('-'))
            out += parse_term(cur, alphabet, true);
        else
            throw std::invalid_argument("parse error at position " + std::to_string(cur.pos) +
                                        " in '" + text + "'");
    }
    return out;
}

CentralPoly parse_central_poly(const std::string& text, const AlphabetPtr& alphabet, int bound) {
    Cursor cur{text};
    cur.skip_ws();
    CentralPoly out = CentralPoly::zero(alphabet, bound);
    if (cur.peek() == '0') {
        cur.expect('0');
        if (!cur.done()) throw std::invalid_argument("trailing input after '0' in '" + text + "'");
        return out;
    }
    for (;;) {
        cur.expect('x');
        cur.expect('^');
        int dx = std::stoi(cur.take_while(digit_char));
        cur.expect('y');
        cur.expect('^');
        int dy = std::stoi(cur.take_while(digit_char));
        cur.expect('*');
        cur.expect('(');
        size_t depth = 1, start = cur.pos;
        while (cur.pos < text.size() && depth > 0) {
            if (text[cur.pos] == '(') ++depth;
            if (text[cur.pos] == ')') --depth;
            ++cur.pos;
        }
        if (depth != 0) throw std::invalid_argument("unbalanced parentheses in '" + text + "'");
        std::string inner = text.substr(start, cur.pos - start - 1);
        FreePoly p = parse_free_poly(inner, alphabet);
        out.set_coeff({dx, dy}, out.coeff({dx, dy}) + p);
        if (cur.done()) break;
        cur.expect('+');
    }
    return out;
}

} // namespace rotlab
