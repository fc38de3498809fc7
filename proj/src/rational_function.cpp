#include "mk/rational_function.hpp"

#include <stdexcept>

namespace mk {

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Poly::constant(GaussRat(1));
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divrem(g).first;
        den_ = den_.divrem(g).first;
    }
    GaussRat lead = den_.leading();
    num_ = (GaussRat(1) / lead) * num_;
    den_ = (GaussRat(1) / lead) * den_;
}

std::optional<GaussRat> RationalFunction::value_at_infinity() const {
    if (has_pole_at_infinity()) return std::nullopt;
    if (num_.degree() < den_.degree()) return GaussRat(0);
    return num_.leading() / den_.leading();
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
RationalFunction operator-(const RationalFunction& a) {
    return RationalFunction(-a.num_, a.den_);
}
RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}
RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("RationalFunction: division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::derivative() const {
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunction RationalFunction::compose(const RationalFunction& inner) const {
    // N(A/B)/D(A/B), cleared by B^m with m = max(deg N, deg D).
    const Poly& A = inner.num_;
    const Poly& B = inner.den_;
    long m = map_degree();
    std::vector<Poly> bpow(static_cast<size_t>(m) + 1);
    bpow[0] = Poly::constant(GaussRat(1));
    for (long i = 1; i <= m; ++i) bpow[static_cast<size_t>(i)] = bpow[static_cast<size_t>(i - 1)] * B;

    auto cleared = [&](const Poly& p) {
        Poly acc;
        Poly apow = Poly::constant(GaussRat(1));
        for (long i = 0; i <= p.degree(); ++i) {
            GaussRat ci = p.coeff(i);
            if (!ci.is_zero()) acc = acc + ci * (apow * bpow[static_cast<size_t>(m - i)]);
            if (i < p.degree()) apow = apow * A;
        }
        return acc;
    };
    return RationalFunction(cleared(num_), cleared(den_));
}

GaussRat RationalFunction::eval(const GaussRat& z) const {
    GaussRat d = den_.eval(z);
    if (d.is_zero()) throw PoleHit("RationalFunction::eval: pole hit at exact point");
    return num_.eval(z) / d;
}

cplx RationalFunction::eval(const cplx& z) const {
    cplx d = den_.eval(z);
    if (d == cplx(0.0, 0.0)) throw PoleHit("RationalFunction::eval: pole hit");
    return num_.eval(z) / d;
}

ExactPrincipalPart principal_part(const RationalFunction& q, const GaussRat& pole) {
    // Shift to w = z - pole; den = w^m * d0 with d0(0) != 0.
    Poly num = q.num().shift(pole);
    Poly den = q.den().shift(pole);
    int m = 0;
    while (den.coeff(m).is_zero()) ++m;
    if (m == 0) throw NotAPole("principal_part: point is not a pole");
    std::vector<GaussRat> d0(den.coeffs().begin() + m, den.coeffs().end());
    Poly dred{std::vector<GaussRat>(d0)};
    // Power-series division num/dred up to order m-1 gives the coefficients
    // b_k of w^{k-m}; coefficient of (z-pole)^{-j} is b_{m-j}.
    std::vector<GaussRat> b(static_cast<size_t>(m), GaussRat(0));
    GaussRat inv0 = GaussRat(1) / dred.coeff(0);
    for (int k = 0; k < m; ++k) {
        GaussRat acc = num.coeff(k);
        for (int j = 1; j <= k; ++j) acc -= dred.coeff(j) * b[static_cast<size_t>(k - j)];
        b[static_cast<size_t>(k)] = acc * inv0;
    }
    ExactPrincipalPart pp;
    pp.pole = pole;
    pp.coefficients.resize(static_cast<size_t>(m));
    bool any = false;
    for (int j = 1; j <= m; ++j) {
        pp.coefficients[static_cast<size_t>(j - 1)] = b[static_cast<size_t>(m - j)];
        if (!pp.coefficients[static_cast<size_t>(j - 1)].is_zero()) any = true;
    }
    if (!any) throw NotAPole("principal_part: removable singularity");
    while (!pp.coefficients.empty() && pp.coefficients.back().is_zero()) pp.coefficients.pop_back();
    return pp;
}

static std::vector<cplx> taylor_shift(std::vector<cplx> c, const cplx& a) {
    // c[k] becomes the coefficient of w^k in p(w + a).
    if (c.empty()) return c;
    for (size_t i = 0; i + 1 < c.size(); ++i)
        for (size_t j = c.size() - 1; j > i; --j) c[j - 1] += a * c[j];
    return c;
}

PrincipalPart principal_part_numeric(const std::vector<cplx>& num, const std::vector<cplx>& den,
                                     const cplx& pole, int order) {
    std::vector<cplx> numT = taylor_shift(num, pole);
    std::vector<cplx> denT = taylor_shift(den, pole);
    numT.resize(std::max(numT.size(), static_cast<size_t>(order)), cplx(0, 0));
    denT.resize(std::max(denT.size(), static_cast<size_t>(order) * 2 + 1), cplx(0, 0));
    // den = w^order * d0(w); the first `order` shifted coefficients are ~0.
    std::vector<cplx> d0(denT.begin() + order, denT.end());
    std::vector<cplx> b(static_cast<size_t>(order), cplx(0, 0));
    for (int k = 0; k < order; ++k) {
        cplx acc = numT[static_cast<size_t>(k)];
        for (int j = 1; j <= k; ++j) acc -= d0[static_cast<size_t>(j)] * b[static_cast<size_t>(k - j)];
        b[static_cast<size_t>(k)] = acc / d0[0];
    }
    PrincipalPart pp;
    pp.pole = pole;
    pp.coefficients.assign(static_cast<size_t>(order), cplx(0, 0));
    for (int j = 1; j <= order; ++j)
        pp.coefficients[static_cast<size_t>(j - 1)] = b[static_cast<size_t>(order - j)];
    return pp;
}

} // namespace mk
