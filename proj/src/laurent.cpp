#include "mk/laurent.hpp"

namespace mk {

std::pair<long, long> LaurentPolynomial::bidegree() const {
    if (c_.empty()) throw ZeroInput("bidegree of zero Laurent polynomial");
    return {c_.begin()->first, c_.rbegin()->first};
}

bool LaurentPolynomial::is_proper() const {
    auto [n1, n2] = bidegree();
    return n1 < 0 && n2 > 0;
}

long LaurentPolynomial::map_degree() const {
    auto [n1, n2] = bidegree();
    return std::max(0L, -n1) + std::max(0L, n2);
}

LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    std::map<long, GaussRat> m = a.c_;
    for (const auto& [k, v] : b.c_) m[k] += v;
    return LaurentPolynomial(std::move(m));
}

LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    std::map<long, GaussRat> m = a.c_;
    for (const auto& [k, v] : b.c_) m[k] -= v;
    return LaurentPolynomial(std::move(m));
}

LaurentPolynomial operator-(const LaurentPolynomial& a) {
    std::map<long, GaussRat> m = a.c_;
    for (auto& [k, v] : m) v = -v;
    return LaurentPolynomial(std::move(m));
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    std::map<long, GaussRat> m;
    for (const auto& [ka, va] : a.c_)
        for (const auto& [kb, vb] : b.c_) m[ka + kb] += va * vb;
    return LaurentPolynomial(std::move(m));
}

LaurentPolynomial operator*(const GaussRat& s, const LaurentPolynomial& a) {
    std::map<long, GaussRat> m = a.c_;
    for (auto& [k, v] : m) v *= s;
    return LaurentPolynomial(std::move(m));
}

LaurentPolynomial LaurentPolynomial::derivative() const {
    std::map<long, GaussRat> m;
    for (const auto& [k, v] : c_)
        if (k != 0) m[k - 1] = GaussRat(k) * v;
    return LaurentPolynomial(std::move(m));
}

std::optional<LaurentPolynomial> LaurentPolynomial::antiderivative() const {
    if (!coeff(-1).is_zero()) return std::nullopt;
    std::map<long, GaussRat> m;
    for (const auto& [k, v] : c_) m[k + 1] = v / GaussRat(k + 1);
    return LaurentPolynomial(std::move(m));
}

LaurentPolynomial LaurentPolynomial::principal_at_zero() const {
    std::map<long, GaussRat> m;
    for (const auto& [k, v] : c_)
        if (k < 0) m[k] = v;
    return LaurentPolynomial(std::move(m));
}

LaurentPolynomial LaurentPolynomial::regular_part_no_constant() const {
    std::map<long, GaussRat> m;
    for (const auto& [k, v] : c_)
        if (k > 0) m[k] = v;
    return LaurentPolynomial(std::move(m));
}

GaussRat LaurentPolynomial::eval(const GaussRat& z) const {
    if (c_.empty()) return GaussRat(0);
    long n1 = c_.begin()->first;
    if (n1 < 0 && z.is_zero()) throw PoleHit("LaurentPolynomial::eval: pole at 0");
    // Horner on z^k * L(z) with k = max(0, -n1), then divide by z^k.
    GaussRat acc(0);
    long prev = c_.rbegin()->first + 1;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        for (long j = 0; j < prev - it->first; ++j) acc *= z;
        acc += it->second;
        prev = it->first;
    }
    for (long j = 0; j < prev; ++j) acc *= z;          // only when n1 > 0
    for (long j = 0; j < -prev; ++j) acc /= z;
    return acc;
}

cplx LaurentPolynomial::eval(const cplx& z) const {
    cplx acc(0, 0);
    for (const auto& [k, v] : c_) acc += v.to_complex() * std::pow(z, static_cast<double>(k));
    return acc;
}

RationalFunction LaurentPolynomial::to_rational() const {
    if (c_.empty()) return RationalFunction();
    long n1 = c_.begin()->first;
    long shift = std::max(0L, -n1);
    std::vector<GaussRat> num(static_cast<size_t>(c_.rbegin()->first + shift) + 1, GaussRat(0));
    for (const auto& [k, v] : c_) num[static_cast<size_t>(k + shift)] = v;
    return RationalFunction(Poly(std::move(num)), Poly::monomial(static_cast<int>(shift)));
}

std::optional<LaurentPolynomial> LaurentPolynomial::from_rational(const RationalFunction& f) {
    const Poly& d = f.den();
    for (long k = 0; k < d.degree(); ++k)
        if (!d.coeff(k).is_zero()) return std::nullopt;
    long shift = d.degree();
    GaussRat lead = d.leading();
    std::map<long, GaussRat> m;
    for (long k = 0; k <= f.num().degree(); ++k) {
        GaussRat c = f.num().coeff(k);
        if (!c.is_zero()) m[k - shift] = c / lead;
    }
    return LaurentPolynomial(std::move(m));
}

GaussRat residue_product(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    const LaurentPolynomial& small = a.term_count() <= b.term_count() ? a : b;
    const LaurentPolynomial& big = a.term_count() <= b.term_count() ? b : a;
    GaussRat acc(0);
    for (const auto& [k, v] : small.coeffs()) {
        GaussRat c = big.coeff(-1 - k);
        if (!c.is_zero()) acc += c * v;
    }
    return acc;
}

GaussRat circle_residue(const LaurentPolynomial& L, const LaurentPolynomial& m, int i, size_t cap) {
    if (i < 0) throw std::invalid_argument("circle_residue: negative power");
    LaurentPolynomial cur = LaurentPolynomial::monomial(0);
    size_t ops = 0;
    for (int j = 0; j < i; ++j) {
        ops += cur.term_count() * L.term_count();
        if (ops > cap) throw CapExceeded("circle_residue: expansion cap exceeded");
        cur = cur * L;
    }
    GaussRat acc(0);
    for (const auto& [k, v] : m.coeffs()) {
        GaussRat c = cur.coeff(-1 - k);
        if (!c.is_zero()) acc += c * v;
    }
    return acc;
}

void LaurentPowerStream::advance() {
    ops_ += cur_.term_count() * base_.term_count();
    if (ops_ > cap_) throw CapExceeded("LaurentPowerStream: expansion cap exceeded");
    cur_ = cur_ * base_;
    ++i_;
}

} // namespace mk
