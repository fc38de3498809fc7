#include "mk/poly.hpp"

#include <stdexcept>

namespace mk {

Poly Poly::monomial(int k, const GaussRat& a) {
    if (k < 0) throw std::invalid_argument("Poly::monomial: negative exponent");
    std::vector<GaussRat> v(static_cast<size_t>(k) + 1, GaussRat(0));
    v.back() = a;
    return Poly(std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<GaussRat> v(std::max(a.c_.size(), b.c_.size()), GaussRat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<GaussRat> v(std::max(a.c_.size(), b.c_.size()), GaussRat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
    return Poly(std::move(v));
}

Poly operator-(const Poly& a) {
    std::vector<GaussRat> v = a.c_;
    for (auto& x : v) x = -x;
    return Poly(std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<GaussRat> v(a.c_.size() + b.c_.size() - 1, GaussRat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(v));
}

Poly operator*(const GaussRat& s, const Poly& a) {
    std::vector<GaussRat> v = a.c_;
    for (auto& x : v) x *= s;
    return Poly(std::move(v));
}

std::pair<Poly, Poly> Poly::divrem(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("Poly::divrem: division by zero polynomial");
    if (degree() < d.degree()) return {Poly(), *this};
    std::vector<GaussRat> rem = c_;
    long dq = degree() - d.degree();
    std::vector<GaussRat> quo(static_cast<size_t>(dq) + 1, GaussRat(0));
    GaussRat lead = d.leading();
    for (long k = dq; k >= 0; --k) {
        GaussRat f = rem[static_cast<size_t>(k + d.degree())] / lead;
        quo[static_cast<size_t>(k)] = f;
        if (f.is_zero()) continue;
        for (long j = 0; j <= d.degree(); ++j)
            rem[static_cast<size_t>(k + j)] -= f * d.c_[static_cast<size_t>(j)];
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<GaussRat> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = GaussRat(static_cast<long>(i)) * c_[i];
    return Poly(std::move(v));
}

Poly Poly::antiderivative() const {
    if (c_.empty()) return Poly();
    std::vector<GaussRat> v(c_.size() + 1, GaussRat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        v[i + 1] = c_[i] / GaussRat(static_cast<long>(i) + 1);
    return Poly(std::move(v));
}

Poly Poly::compose(const Poly& inner) const {
    Poly acc;
    for (long k = degree(); k >= 0; --k) {
        acc = acc * inner + Poly::constant(c_[static_cast<size_t>(k)]);
    }
    return acc;
}

Poly Poly::shift(const GaussRat& a) const {
    return compose(Poly({a, GaussRat(1)}));
}

Poly Poly::reverse() const {
    std::vector<GaussRat> v(c_.rbegin(), c_.rend());
    return Poly(std::move(v));
}

GaussRat Poly::eval(const GaussRat& z) const {
    GaussRat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

cplx Poly::eval(const cplx& z) const {
    cplx acc(0.0, 0.0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + it->to_complex();
    return acc;
}

std::vector<cplx> Poly::to_complex() const {
    std::vector<cplx> v;
    v.reserve(c_.size());
    for (const auto& x : c_) v.push_back(x.to_complex());
    return v;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return (GaussRat(1) / leading()) * (*this);
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divrem(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

} // namespace mk
