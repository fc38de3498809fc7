#ifndef MK_LAURENT_MOMENT_HPP
#define MK_LAURENT_MOMENT_HPP

#include "mk/branches.hpp"
#include "mk/laurent.hpp"

namespace mk {

struct CongruenceUnmet : std::runtime_error {
    explicit CongruenceUnmet(const std::string& m) : std::runtime_error(m) {}
};
struct CrossCheckMismatch : std::runtime_error {
    explicit CrossCheckMismatch(const std::string& m) : std::runtime_error(m) {}
};
struct WitnessNotFoundWithinBound : std::runtime_error {
    explicit WitnessNotFoundWithinBound(const std::string& m) : std::runtime_error(m) {}
};

/// Bound certificate for the unit-circle moment problem: vanishing of
/// integral L^i dM for 0 <= i <= bound forces vanishing for all i.
struct BautinCertificate {
    long n_of_l = 0;       // number of distinct images of the J_0 indicator vector
    long m_deg = 0;        // degree of M as a rational map
    long bound = 0;        // m * (N(L) - 1) + 1
    long fallback_bound = 0; // m * (n! - 1) + 1
    bool used_fallback = false;
};

/// N(L) via the orbit of the J_0 indicator vector under the monodromy group;
/// falls back to the n! bound when the orbit enumeration exceeds the cap.
BautinCertificate bautin_index(const LaurentPolynomial& L, long m_deg, size_t cap = 1'000'000);
BautinCertificate bautin_index(const BranchSystem& bs, long m_deg, size_t cap = 1'000'000);

struct DvdkResult {
    bool proper = false;
    std::optional<int> witness;   // first i >= 1 with nonzero constant term of L^i
    GaussRat constant_term;       // the witness value
    long search_bound = 0;        // N(L) (the m = 1 Bautin bound)
    bool within_bound = false;    // witness found at or below search_bound
};

/// Duistermaat-van der Kallen check: a proper Laurent polynomial has some
/// positive power with nonzero constant term. Searches past the primary
/// bound up to `hard_cap` and flags when the primary bound was exceeded.
DvdkResult dvdk_check(const LaurentPolynomial& L, int hard_cap = 2000);

/// Witness index for polynomial-type m with the degree congruence of the
/// second Duistermaat-van der Kallen generalization; exact residue verified.
struct D2Witness {
    int index;
    GaussRat residue;
};
D2Witness d2_witness(const LaurentPolynomial& L, const LaurentPolynomial& m);

struct LauResult {
    bool holds = false;
    double max_residual = 0;
    std::vector<cplx> samples;
    long moments_checked = 0; // exact cross-check depth (Bautin bound)
    bool moments_vanish = false;
};

/// The branch-sum condition equivalent to vanishing of all moments
/// integral L^i dM: sum over J_0 of M_inf(L^{-1}_i(t)) == sum over J_inf of
/// M_0(L^{-1}_i(t)), sampled near the basepoint and cross-checked against
/// exact moment vanishing up to the Bautin bound.
LauResult condition_lau(const LaurentPolynomial& L, const LaurentPolynomial& M,
                        double tol = 1e-8);

struct D3D4Report {
    long n1 = 0, n2 = 0;
    bool d3_applies = false;          // n1 == -1 or n2 == 1
    bool d3_moments_vanish = false;   // only possible for M == 0
    bool d4_applies = false;          // bi-degree (n, p) with p prime and moments vanish
    bool l_is_power_composite = false; // L = L1(z^p) by support divisibility
    bool j_inf_is_block = false;
    bool m_support_avoids_p = false;  // all exponents of M nonzero mod p
    long p = 0;
    std::string note;
};

/// Structure checks around the two theorems on polynomial solutions M:
/// the extremal bi-degree case forces M = 0; the prime-top-degree case forces
/// L = L1(z^p) and M supported away from multiples of p.
D3D4Report d3_d4_check(const LaurentPolynomial& L, const LaurentPolynomial& M);

} // namespace mk

#endif
