#ifndef MK_LAURENT_HPP
#define MK_LAURENT_HPP

#include "mk/rational_function.hpp"

#include <map>
#include <optional>

namespace mk {

struct ZeroInput : std::runtime_error {
    explicit ZeroInput(const std::string& m) : std::runtime_error(m) {}
};
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& m) : std::runtime_error(m) {}
};

/// Laurent polynomial: finite sum of c_k z^k with k possibly negative.
/// Only nonzero coefficients are stored.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    explicit LaurentPolynomial(std::map<long, GaussRat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static LaurentPolynomial monomial(long k, const GaussRat& a = GaussRat(1)) {
        return LaurentPolynomial({{k, a}});
    }

    const std::map<long, GaussRat>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    GaussRat coeff(long k) const {
        auto it = c_.find(k);
        return it == c_.end() ? GaussRat(0) : it->second;
    }

    /// (min exponent, max exponent); throws ZeroInput on the zero element.
    std::pair<long, long> bidegree() const;
    /// proper <=> n1 < 0 < n2.
    bool is_proper() const;
    /// Degree as a rational map: order of pole at 0 plus order of pole at infinity.
    long map_degree() const;
    size_t term_count() const { return c_.size(); }

    friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend LaurentPolynomial operator-(const LaurentPolynomial& a);
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend LaurentPolynomial operator*(const GaussRat& s, const LaurentPolynomial& a);
    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a.c_ == b.c_;
    }

    LaurentPolynomial derivative() const;
    /// Antiderivative as a Laurent polynomial (zero constant term);
    /// nullopt when the z^{-1} coefficient is nonzero.
    std::optional<LaurentPolynomial> antiderivative() const;

    /// Negative-exponent part (the principal part at 0).
    LaurentPolynomial principal_at_zero() const;
    /// Non-negative-exponent part with the constant term dropped.
    LaurentPolynomial regular_part_no_constant() const;

    GaussRat eval(const GaussRat& z) const;
    cplx eval(const cplx& z) const;

    RationalFunction to_rational() const;
    /// Conversion from a rational function with denominator z^k; nullopt otherwise.
    static std::optional<LaurentPolynomial> from_rational(const RationalFunction& f);

private:
    void trim() {
        for (auto it = c_.begin(); it != c_.end();) {
            if (it->second.is_zero()) it = c_.erase(it);
            else ++it;
        }
    }
    std::map<long, GaussRat> c_;
};

/// Coefficient of z^{-1} in L^i * m, i.e. the circle integral divided by 2*pi*i.
/// `cap` bounds the total number of coefficient multiplications.
GaussRat circle_residue(const LaurentPolynomial& L, const LaurentPolynomial& m, int i,
                        size_t cap = 1'000'000);

/// Coefficient of z^{-1} in a * b without materializing the product.
GaussRat residue_product(const LaurentPolynomial& a, const LaurentPolynomial& b);

/// Incremental stream of powers L^0, L^1, ... for repeated residue extraction;
/// amortizes the expansion across a whole moment sequence.
class LaurentPowerStream {
public:
    explicit LaurentPowerStream(LaurentPolynomial L, size_t cap = 100'000'000)
        : base_(std::move(L)), cur_(LaurentPolynomial::monomial(0)), cap_(cap) {}
    /// Current exponent i (starts at 0).
    int exponent() const { return i_; }
    const LaurentPolynomial& current() const { return cur_; }
    void advance();

private:
    LaurentPolynomial base_, cur_;
    size_t cap_;
    size_t ops_ = 0;
    int i_ = 0;
};

} // namespace mk

#endif
