#include "rotlab/central_poly.hpp"

#include <climits>
#include <sstream>
#include <stdexcept>

namespace rotlab {

CentralPoly::CentralPoly(AlphabetPtr alphabet, int bound)
    : alphabet_(std::move(alphabet)), bound_(bound) {
    if (bound < 0) throw std::invalid_argument("truncation bound must be >= 0");
}

CentralPoly CentralPoly::one(AlphabetPtr a, int bound) {
    CentralPoly p(a, bound);
    p.coeffs_.emplace(BiDegree{0, 0}, FreePoly::one(a));
    return p;
}

CentralPoly CentralPoly::monomial(BiDegree d, const FreePoly& p, int bound) {
    CentralPoly out(p.alphabet(), bound);
    out.set_coeff(d, p);
    return out;
}

void CentralPoly::set_coeff(BiDegree d, FreePoly p) {
    if (d.x < 0 || d.y < 0) throw std::invalid_argument("negative bidegree");
    if (d.total() > bound_ || p.is_zero()) {
        coeffs_.erase(d);
        return;
    }
    coeffs_.insert_or_assign(d, std::move(p));
}

FreePoly CentralPoly::coeff(BiDegree d) const {
    if (d.total() > bound_)
        throw std::out_of_range("coeff: bidegree above truncation bound");
    auto it = coeffs_.find(d);
    return it == coeffs_.end() ? FreePoly::zero(alphabet_) : it->second;
}

int CentralPoly::top_total_degree() const {
    int top = -1;
    for (const auto& [d, p] : coeffs_) top = std::max(top, d.total());
    return top;
}

CentralPoly CentralPoly::operator-() const {
    CentralPoly out(alphabet_, bound_);
    for (const auto& [d, p] : coeffs_) out.coeffs_.emplace(d, -p);
    return out;
}

namespace {
void require_compatible(const CentralPoly& a, const CentralPoly& b, const char* op) {
    require_same_alphabet(a.alphabet(), b.alphabet(), op);
    if (a.bound() != b.bound())
        throw std::invalid_argument(std::string(op) + ": truncation bound mismatch (" +
                                    std::to_string(a.bound()) + " vs " + std::to_string(b.bound()) + ")");
}
} // namespace

CentralPoly operator+(const CentralPoly& a, const CentralPoly& b) {
    require_compatible(a, b, "series_add");
    CentralPoly out = a;
    for (const auto& [d, p] : b.coeffs_) {
        auto it = out.coeffs_.find(d);
        if (it == out.coeffs_.end()) {
            out.coeffs_.emplace(d, p);
        } else {
            FreePoly s = it->second + p;
            if (s.is_zero())
                out.coeffs_.erase(it);
            else
                it->second = std::move(s);
        }
    }
    return out;
}

CentralPoly operator-(const CentralPoly& a, const CentralPoly& b) { return a + (-b); }

CentralPoly operator*(const CentralPoly& a, const CentralPoly& b) {
    require_compatible(a, b, "series_mul");
    CentralPoly out(a.alphabet_, a.bound_);
    for (const auto& [da, pa] : a.coeffs_) {
        for (const auto& [db, pb] : b.coeffs_) {
            BiDegree d = da + db;
            if (d.total() > a.bound_) continue;
            FreePoly prod = pa * pb;
            if (prod.is_zero()) continue;
            auto it = out.coeffs_.find(d);
            if (it == out.coeffs_.end()) {
                out.coeffs_.emplace(d, std::move(prod));
            } else {
                FreePoly s = it->second + prod;
                if (s.is_zero())
                    out.coeffs_.erase(it);
                else
                    it->second = std::move(s);
            }
        }
    }
    return out;
}

bool operator==(const CentralPoly& a, const CentralPoly& b) {
    require_compatible(a, b, "series_eq");
    return a.coeffs_ == b.coeffs_;
}

std::string CentralPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, p] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << "x^" << d.x << " y^" << d.y << " * (" << p.str() << ")";
    }
    return os.str();
}

CentralPoly series_inverse(const CentralPoly& a) {
    const FreePoly c0 = a.coeff({0, 0});
    if (c0 != FreePoly::one(a.alphabet()))
        throw std::invalid_argument("series_inverse: constant term is not 1, not invertible in the truncated ring");
    CentralPoly n = a - CentralPoly::one(a.alphabet(), a.bound()); // nilpotent part
    CentralPoly out = CentralPoly::one(a.alphabet(), a.bound());
    CentralPoly pw = CentralPoly::one(a.alphabet(), a.bound());
    for (int k = 1; k <= a.bound(); ++k) {
        pw = pw * n;
        if (pw.is_zero()) break;
        out += (k % 2 == 0) ? pw : -pw;
    }
    return out;
}

SeriesSpec SeriesSpec::linear(SeriesVar v, Gen carrier, Rational alpha) {
    SeriesSpec s;
    s.variable = v;
    s.carrier = carrier;
    s.taps = {std::move(alpha)};
    s.form = SeriesForm::linear;
    return s;
}

SeriesSpec SeriesSpec::geometric(SeriesVar v, Gen carrier, Rational c) {
    SeriesSpec s;
    s.variable = v;
    s.carrier = carrier;
    s.taps = {std::move(c)};
    s.form = SeriesForm::geometric;
    return s;
}

SeriesSpec SeriesSpec::powers(SeriesVar v, Gen carrier, std::vector<Rational> taps) {
    SeriesSpec s;
    s.variable = v;
    s.carrier = carrier;
    s.taps = std::move(taps);
    s.form = SeriesForm::polynomial_list;
    return s;
}

int SeriesSpec::top_tap_degree() const {
    if (form == SeriesForm::geometric) return taps.empty() || taps[0].is_zero() ? -1 : INT_MAX;
    int top = -1;
    for (size_t k = 0; k < taps.size(); ++k)
        if (!taps[k].is_zero()) top = int(k) + 1;
    return top;
}

CentralPoly series_from_spec(const SeriesSpec& s, AlphabetPtr alphabet, int bound) {
    CentralPoly out = CentralPoly::one(alphabet, bound);
    auto bidegree = [&](int k) {
        return s.variable == SeriesVar::x ? BiDegree{k, 0} : BiDegree{0, k};
    };
    if (s.form == SeriesForm::geometric) {
        Rational c = s.taps.empty() ? Rational(1) : s.taps[0];
        Rational ck(1);
        for (int k = 1; k <= bound; ++k) {
            ck *= c;
            out.set_coeff(bidegree(k),
                          FreePoly::term(alphabet, ck, Word::power(s.carrier, size_t(k))));
        }
        return out;
    }
    for (size_t j = 0; j < s.taps.size(); ++j) {
        int k = int(j) + 1;
        if (k > bound) break;
        if (s.taps[j].is_zero()) continue;
        out.set_coeff(bidegree(k),
                      FreePoly::term(alphabet, s.taps[j], Word::power(s.carrier, size_t(k))));
    }
    return out;
}

} // namespace rotlab
