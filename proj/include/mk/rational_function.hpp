#ifndef MK_RATIONAL_FUNCTION_HPP
#define MK_RATIONAL_FUNCTION_HPP

#include "mk/poly.hpp"

#include <optional>

namespace mk {

/// Exact rational function num/den, kept coprime with monic denominator.
/// deg (as a map of the sphere) is max(deg num, deg den).
class RationalFunction {
public:
    RationalFunction() : num_(Poly::constant(GaussRat(0))), den_(Poly::constant(GaussRat(1))) {}
    RationalFunction(Poly num, Poly den);
    static RationalFunction from_poly(Poly p) { return RationalFunction(std::move(p), Poly::constant(GaussRat(1))); }
    static RationalFunction variable() { return from_poly(Poly::variable()); }
    static RationalFunction constant(const GaussRat& a) { return from_poly(Poly::constant(a)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    /// Degree as a rational map: max(deg num, deg den).
    long map_degree() const { return std::max(num_.degree(), den_.degree()); }
    bool is_polynomial() const { return den_.degree() == 0; }

    bool has_pole_at_infinity() const { return num_.degree() > den_.degree(); }
    /// Finite value at infinity; nullopt when the function has a pole there.
    std::optional<GaussRat> value_at_infinity() const;

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RationalFunction derivative() const;
    /// this(inner(z)) as an exact rational function.
    RationalFunction compose(const RationalFunction& inner) const;

    /// Exact value; throws PoleHit when den(z) == 0.
    GaussRat eval(const GaussRat& z) const;
    /// Floating value; throws PoleHit when |den(z)| == 0 exactly in doubles.
    cplx eval(const cplx& z) const;

private:
    void normalize();
    Poly num_, den_;
};

struct PoleHit : std::runtime_error {
    explicit PoleHit(const std::string& m) : std::runtime_error(m) {}
};
struct NotAPole : std::runtime_error {
    explicit NotAPole(const std::string& m) : std::runtime_error(m) {}
};

/// Principal part of a Laurent expansion at a finite pole:
/// sum of coefficients[j-1] / (z - pole)^j for j = 1..order.
struct PrincipalPart {
    cplx pole;
    std::vector<cplx> coefficients; // index j-1 holds the (z-pole)^{-j} coefficient

    cplx eval(const cplx& z) const {
        cplx acc(0.0, 0.0);
        cplx w = z - pole;
        cplx p(1.0, 0.0);
        for (const auto& c : coefficients) {
            p *= w;
            acc += c / p;
        }
        return acc;
    }
    cplx residue() const { return coefficients.empty() ? cplx(0, 0) : coefficients[0]; }
};

/// Exact principal part at an exact pole location.
struct ExactPrincipalPart {
    GaussRat pole;
    std::vector<GaussRat> coefficients;
};

/// Exact principal part of q at a Gaussian-rational pole; throws NotAPole
/// when den(q) does not vanish at the point.
ExactPrincipalPart principal_part(const RationalFunction& q, const GaussRat& pole);

/// Numeric principal part at a floating pole location of multiplicity
/// inferred from the denominator roots supplied by the caller.
PrincipalPart principal_part_numeric(const std::vector<cplx>& num, const std::vector<cplx>& den,
                                     const cplx& pole, int order);

} // namespace mk

#endif
