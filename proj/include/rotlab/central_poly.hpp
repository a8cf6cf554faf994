#pragma once

#include "rotlab/free_poly.hpp"

#include <map>
#include <vector>

namespace rotlab {

/// Exponent pair of the two central variables x, y.
struct BiDegree {
    int x = 0;
    int y = 0;

    int total() const { return x + y; }
    BiDegree operator+(BiDegree o) const { return {x + o.x, y + o.y}; }

    friend bool operator==(BiDegree a, BiDegree b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(BiDegree a, BiDegree b) { return !(a == b); }
    friend bool operator<(BiDegree a, BiDegree b) {
        if (a.total() != b.total()) return a.total() < b.total();
        return a.x < b.x;
    }
};

/// Truncated bigraded polynomial in central x, y with FreePoly
/// coefficients. Centrality is structural: x and y exist only as the
/// bidegree index, so they commute with everything by construction.
/// Every operation truncates at the (shared, mandatory) bound.
class CentralPoly {
public:
    CentralPoly(AlphabetPtr alphabet, int bound);

    static CentralPoly zero(AlphabetPtr a, int bound) { return CentralPoly(std::move(a), bound); }
    static CentralPoly one(AlphabetPtr a, int bound);
    /// c * x^d.x y^d.y * p
    static CentralPoly monomial(BiDegree d, const FreePoly& p, int bound);

    int bound() const { return bound_; }
    const AlphabetPtr& alphabet() const { return alphabet_; }
    const std::map<BiDegree, FreePoly>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }

    /// Stored coefficient or 0; degrees above the bound are an error
    /// (that information was truncated away).
    FreePoly coeff(BiDegree d) const;

    /// Largest total bidegree with a nonzero coefficient, -1 if zero.
    int top_total_degree() const;

    CentralPoly operator-() const;
    friend CentralPoly operator+(const CentralPoly& a, const CentralPoly& b);
    friend CentralPoly operator-(const CentralPoly& a, const CentralPoly& b);
    friend CentralPoly operator*(const CentralPoly& a, const CentralPoly& b);

    CentralPoly& operator+=(const CentralPoly& o) { *this = *this + o; return *this; }
    CentralPoly& operator-=(const CentralPoly& o) { *this = *this - o; return *this; }
    CentralPoly& operator*=(const CentralPoly& o) { *this = *this * o; return *this; }

    friend bool operator==(const CentralPoly& a, const CentralPoly& b);
    friend bool operator!=(const CentralPoly& a, const CentralPoly& b) { return !(a == b); }

    std::string str() const;

    void set_coeff(BiDegree d, FreePoly p); // drops zero / over-bound entries

private:
    AlphabetPtr alphabet_;
    int bound_;
    std::map<BiDegree, FreePoly> coeffs_; // nonzero, total <= bound
};

inline CentralPoly series_mul(const CentralPoly& a, const CentralPoly& b) { return a * b; }

/// Two-sided inverse of a series with constant term exactly 1, via the
/// Neumann sum of the nilpotent part. Errors otherwise.
CentralPoly series_inverse(const CentralPoly& a);

inline CentralPoly commutator(const CentralPoly& a, const CentralPoly& b) {
    return a * b - b * a;
}

enum class SeriesVar { x, y };
enum class SeriesForm { polynomial_list, linear, geometric };

/// A factor 1 + sum_k taps[k-1] (var * carrier)^k. `linear` means a
/// single tap; `geometric` with tap c encodes (1 - c var carrier)^{-1}.
struct SeriesSpec {
    SeriesVar variable = SeriesVar::x;
    Gen carrier;
    std::vector<Rational> taps;
    SeriesForm form = SeriesForm::polynomial_list;

    static SeriesSpec linear(SeriesVar v, Gen carrier, Rational alpha = Rational(1));
    static SeriesSpec geometric(SeriesVar v, Gen carrier, Rational c = Rational(1));
    static SeriesSpec powers(SeriesVar v, Gen carrier, std::vector<Rational> taps);

    /// Degree of the highest nonzero tap; -1 when all taps vanish.
    /// Geometric specs report the truncation-unbounded marker INT_MAX.
    int top_tap_degree() const;
};

CentralPoly series_from_spec(const SeriesSpec& s, AlphabetPtr alphabet, int bound);

} // namespace rotlab
