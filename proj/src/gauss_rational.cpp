#include "mk/gauss_rational.hpp"

namespace mk {

std::string rational_str(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string GaussRat::str() const {
    if (im == 0) return rational_str(re);
    if (re == 0) return rational_str(im) + "*i";
    std::string s = rational_str(re);
    if (im > 0) s += "+";
    s += rational_str(im) + "*i";
    return s;
}

mpq_class parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + s);
    q.canonicalize();
    return q;
}

} // namespace mk
