#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace rotlab {

enum class GenKind : uint8_t { u = 0, v = 1, g = 2, h = 3, aux = 4 };

/// One noncommuting generator: a kind tag, a 1-based index, and an
/// inverse flag (set only for formal inverse symbols adjoined when a
/// generator is declared potentially invertible).
///
/// The packed code orders generators u1..uM < v1..vM < g.. < h.. < aux,
/// with all inverse symbols after all plain ones; this is the default
/// precedence everywhere.
class Gen {
public:
    Gen() : code_(0) {}
    Gen(GenKind kind, uint16_t index, bool inverse = false)
        : code_((uint32_t(inverse) << 24) | (uint32_t(kind) << 16) | index) {
        if (index == 0) throw std::invalid_argument("generator index starts at 1");
    }

    GenKind kind() const { return GenKind((code_ >> 16) & 0x7); }
    uint16_t index() const { return uint16_t(code_ & 0xffff); }
    bool is_inverse() const { return (code_ >> 24) != 0; }
    uint32_t code() const { return code_; }

    Gen inverse_symbol() const { return Gen(kind(), index(), !is_inverse()); }
    Gen base_symbol() const { return Gen(kind(), index(), false); }

    std::string name() const;
    static Gen parse(const std::string& token);

    friend bool operator==(Gen a, Gen b) { return a.code_ == b.code_; }
    friend bool operator!=(Gen a, Gen b) { return a.code_ != b.code_; }
    friend bool operator<(Gen a, Gen b) { return a.code_ < b.code_; }

private:
    uint32_t code_;
};

// convenience constructors
inline Gen u(uint16_t i) { return Gen(GenKind::u, i); }
inline Gen v(uint16_t i) { return Gen(GenKind::v, i); }
inline Gen g(uint16_t i) { return Gen(GenKind::g, i); }
inline Gen h(uint16_t i) { return Gen(GenKind::h, i); }
inline Gen z(uint16_t i) { return Gen(GenKind::aux, i); }

/// Explicit value object listing the generators a computation may use.
/// Mixing values built over different alphabets is an error, never a
/// silent union.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<Gen> gens);

    /// u1..uM, v1..vM
    static Alphabet uv(uint16_t m);
    /// u1..uM only
    static Alphabet u_only(uint16_t m);
    /// g1..gN, h1..hN (abstract atoms)
    static Alphabet gh(uint16_t n);
    /// g1..gN, v1..vN
    static Alphabet gv(uint16_t n);

    /// Same generators plus the formal inverses of `invertible`.
    Alphabet with_inverses(const std::vector<Gen>& invertible) const;
    Alphabet with_extra(const std::vector<Gen>& extra) const;

    bool contains(Gen x) const;
    const std::vector<Gen>& generators() const { return gens_; }
    size_t size() const { return gens_.size(); }

    /// Generators that carry an adjoined inverse symbol.
    std::vector<Gen> inverted_bases() const;

    std::string describe() const;

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.gens_ == b.gens_; }
    friend bool operator!=(const Alphabet& a, const Alphabet& b) { return !(a == b); }

private:
    std::vector<Gen> gens_; // sorted by code, unique
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

inline AlphabetPtr share(Alphabet a) { return std::make_shared<const Alphabet>(std::move(a)); }

/// Throws unless both sides live over equal alphabets.
void require_same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b, const char* op);

} // namespace rotlab
