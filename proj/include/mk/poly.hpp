#ifndef MK_POLY_HPP
#define MK_POLY_HPP

#include "mk/gauss_rational.hpp"

#include <vector>

namespace mk {

/// Dense univariate polynomial over the Gaussian rationals,
/// coefficients stored by ascending degree. The zero polynomial has
/// an empty coefficient vector and degree -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<GaussRat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(const GaussRat& a) { return Poly({a}); }
    static Poly variable() { return Poly({GaussRat(0), GaussRat(1)}); }
    /// z^k with k >= 0.
    static Poly monomial(int k, const GaussRat& a = GaussRat(1));

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<GaussRat>& coeffs() const { return c_; }
    GaussRat coeff(long k) const {
        if (k < 0 || k >= static_cast<long>(c_.size())) return GaussRat(0);
        return c_[static_cast<size_t>(k)];
    }
    GaussRat leading() const { return c_.empty() ? GaussRat(0) : c_.back(); }

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const GaussRat& s, const Poly& a);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// Euclidean division: *this = q*d + r with deg r < deg d. Throws on d == 0.
    std::pair<Poly, Poly> divrem(const Poly& d) const;

    Poly derivative() const;
    /// Formal antiderivative with zero constant term.
    Poly antiderivative() const;
    /// this(inner(z)) by Horner over polynomials.
    Poly compose(const Poly& inner) const;
    /// this(z + a), the Taylor shift.
    Poly shift(const GaussRat& a) const;
    /// z^deg * this(1/z).
    Poly reverse() const;

    GaussRat eval(const GaussRat& z) const;
    cplx eval(const cplx& z) const;
    /// Coefficients converted to doubles (ascending degree).
    std::vector<cplx> to_complex() const;

    /// Monic gcd via the Euclidean algorithm; gcd(0,0) = 0.
    static Poly gcd(Poly a, Poly b);
    Poly monic() const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<GaussRat> c_;
};

} // namespace mk

#endif
