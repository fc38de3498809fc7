#ifndef MK_ROOTS_HPP
#define MK_ROOTS_HPP

#include "mk/poly.hpp"

#include <vector>

namespace mk {

/// All complex roots of a polynomial given by ascending coefficients.
/// Companion-matrix eigenvalues followed by Newton polishing. Trailing
/// zero coefficients are stripped; roots at 0 from leading zeros are kept.
std::vector<cplx> poly_roots(const std::vector<cplx>& coeffs);

std::vector<cplx> poly_roots(const Poly& p);

/// Evaluate a double-coefficient polynomial (ascending) by Horner.
cplx poly_eval(const std::vector<cplx>& coeffs, const cplx& z);

/// Derivative coefficients (ascending).
std::vector<cplx> poly_derivative(const std::vector<cplx>& coeffs);

/// Cluster points within `tol` of each other; returns representatives and
/// multiplicities. Used for deduplicating critical values and pole sets.
struct Cluster {
    cplx point;
    int multiplicity;
};
std::vector<Cluster> cluster_points(const std::vector<cplx>& pts, double tol);

} // namespace mk

#endif
