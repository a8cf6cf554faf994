#include "rotlab/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace rotlab {

Rational Rational::from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    q.canonicalize();
    return Rational(q);
}

std::string Rational::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace rotlab
