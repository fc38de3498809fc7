#ifndef MK_GAUSS_RATIONAL_HPP
#define MK_GAUSS_RATIONAL_HPP

#include <complex>
#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace mk {

using cplx = std::complex<double>;

/// Exact complex rational a + b*i with a, b in Q (arbitrary precision).
/// This is the coefficient field for every exact computation in the project.
struct GaussRat {
    mpq_class re;
    mpq_class im;

    GaussRat() : re(0), im(0) {}
    GaussRat(long r) : re(r), im(0) {}
    GaussRat(const mpq_class& r) : re(r), im(0) {}
    GaussRat(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRat from_longs(long num_re, long den_re, long num_im = 0, long den_im = 1) {
        mpq_class r(num_re, den_re), i(num_im, den_im);
        r.canonicalize();
        i.canonicalize();
        return GaussRat(r, i);
    }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussRat conj() const { return GaussRat(re, -im); }

    /// |z|^2 as an exact rational.
    mpq_class norm() const { return re * re + im * im; }

    cplx to_complex() const { return cplx(re.get_d(), im.get_d()); }

    friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
        return GaussRat(a.re + b.re, a.im + b.im);
    }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
        return GaussRat(a.re - b.re, a.im - b.im);
    }
    friend GaussRat operator-(const GaussRat& a) { return GaussRat(-a.re, -a.im); }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return GaussRat(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
        mpq_class n = b.norm();
        if (n == 0) throw std::domain_error("GaussRat: division by zero");
        GaussRat num = a * b.conj();
        return GaussRat(num.re / n, num.im / n);
    }
    GaussRat& operator+=(const GaussRat& b) { re += b.re; im += b.im; return *this; }
    GaussRat& operator-=(const GaussRat& b) { re -= b.re; im -= b.im; return *this; }
    GaussRat& operator*=(const GaussRat& b) { *this = *this * b; return *this; }
    GaussRat& operator/=(const GaussRat& b) { *this = *this / b; return *this; }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    std::string str() const;
};

/// Parse "p/q" or "p" into an exact rational. Throws on malformed input.
mpq_class parse_rational(const std::string& s);

std::string rational_str(const mpq_class& q);

} // namespace mk

#endif
