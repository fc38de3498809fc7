#ifndef MK_MOMENT_ENGINE_HPP
#define MK_MOMENT_ENGINE_HPP

#include "mk/constellation.hpp"
#include "mk/laurent.hpp"

namespace mk {

struct TNotInRange : std::runtime_error {
    explicit TNotInRange(const std::string& m) : std::runtime_error(m) {}
};
struct InconsistentPartition : std::runtime_error {
    explicit InconsistentPartition(const std::string& m) : std::runtime_error(m) {}
};
struct NotDoublyTransitive : std::runtime_error {
    explicit NotDoublyTransitive(const std::string& m) : std::runtime_error(m) {}
};

/// Moments m_i = integral over gamma of P^i q dz. Exact whenever P and q are
/// Laurent polynomials and gamma is the unit circle (values are then
/// 2*pi*i times Gaussian rationals).
struct MomentSequence {
    std::vector<cplx> values;
    std::vector<double> errors;
    bool exact = false;
    std::vector<GaussRat> exact_values; // populated when exact: m_i / (2 pi i)
};

MomentSequence moment_sequence(const RationalFunction& P, const RationalFunction& q,
                               const Curve& gamma, int N, double target = 1e-10);

enum class VerdictKind { Rational, NotRational, RationalAndZero, Inconclusive };

struct RationalityVerdict {
    VerdictKind kind = VerdictKind::Inconclusive;
    std::string certificate;            // which criterion fired and how
    std::optional<cplx> witness_point;  // sample where some phi_s is nonzero
    std::optional<cplx> witness_value;  // the offending phi_s (or moment) value
    std::optional<int> witness_moment;  // index of a nonzero moment, when known
};

/// The full system data behind Theorem-style rationality tests; reused by the
/// admissibility module.
struct PhiSystem {
    BranchSystem bs;
    Constellation constellation;
    CoefficientSystem cs;
    Deformation deformation;
};

PhiSystem phi_system(const RationalFunction& P, const Curve& gamma);

struct RationalityOptions {
    int samples = 20;
    double zero_tol = 1e-9;       // |phi| < zero_tol * scale counts as zero
    double nonzero_tol = 1e-6;    // |phi| > nonzero_tol * scale refutes; between is inconclusive
    int moment_scan = 24;         // witness search depth for moment-based certificates
};

/// Rationality of I_infinity via the coefficient system: rational iff every
/// phi_s vanishes identically, sampled on a circle near the basepoint.
/// When q has a rational antiderivative Q the integrated form
/// sum_i f[s][i] Q(P^{-1}_i) is cross-checked as well.
RationalityVerdict rationality_test(const RationalFunction& P, const RationalFunction& q,
                                    const Curve& gamma, const RationalityOptions& opt = {});
RationalityVerdict rationality_test(const PhiSystem& sys, const RationalFunction& q,
                                    const RationalityOptions& opt = {});

/// Vanishing criterion under q^{-1}{inf} subset P^{-1}{inf} and P(inf) = inf:
/// rational implies identically zero, so the verdict upgrades Rational to
/// RationalAndZero and any nonzero moment refutes rationality outright.
RationalityVerdict vanishing_test(const RationalFunction& P, const RationalFunction& q,
                                  const Curve& gamma, const RationalityOptions& opt = {});

/// Evaluation of I_infinity(t) by the closed-curve residue formula.
cplx eval_I_closed(const RationalFunction& P, const RationalFunction& q, const Curve& gamma,
                   const cplx& t);

/// Evaluation of I_infinity(t) by the non-closed formula with the qhat term
/// and per-branch logarithm increments along gamma.
cplx eval_I_nonclosed(const RationalFunction& P, const RationalFunction& q, const Curve& gamma,
                      const cplx& t);

/// qhat(t) = integral over gamma of (q(z) - q(t))/(z - t) dz, assembled
/// term by term from the partial-fraction decomposition of q.
cplx qhat(const RationalFunction& q, const Curve& gamma, const cplx& t);

struct NonClosedReport {
    bool same_endpoint_value = false; // P(a) == P(b)
    int d_a = 0, d_b = 0;             // endpoint multiplicities
    bool fo_holds = false;            // fo1+fo2, or fo3, within tolerance
    double max_residual = 0;
    bool rysa_forces_zero = false;    // an endpoint sum with a single term
    std::string note;
};

/// Necessary conditions for rationality over a non-closed curve: the J_a/J_b
/// endpoint sums and the structural alternative (endpoints ramified or equal
/// values).
NonClosedReport nonclosed_necessary(const RationalFunction& P, const RationalFunction& q,
                                    const Curve& gamma);

struct FactorReport {
    std::vector<std::vector<int>> partition; // branch classes by Q(P^{-1}_i) values
    bool has_common_factor = false;          // some class of size >= 2
    bool q_composed_through_p = false;       // single class: Q = Qtilde(P)
    bool partition_is_block_system = false;
};

/// Detects a nontrivial common compositional right factor of P and Q by the
/// branch-value partition of Q(P^{-1}_i).
FactorReport detect_common_factor(const RationalFunction& P, const RationalFunction& Q);

/// Solve T = X(W) for a rational X of the forced degree; exact verification.
std::optional<RationalFunction> decompose_by(const RationalFunction& T, const RationalFunction& W);

/// Recover qtilde with q = qtilde(P) P', verified exactly.
std::optional<RationalFunction> reconstruct_qtilde(const RationalFunction& P,
                                                   const RationalFunction& q);

struct GenericCriterionResult {
    RationalityVerdict verdict;
    bool poles_one_side = false;
    bool q_is_composed = false;          // q = qtilde(P) P'
    std::optional<RationalFunction> qtilde;
    bool image_curve_closed = false;
    bool qtilde_poles_outside_image = false;
};

/// Full biconditional for doubly transitive monodromy: rational iff poles of
/// P lie on one side, or P(gamma) is closed and q = qtilde(P) P'. All moments
/// vanish exactly when additionally the poles of qtilde lie outside P(gamma).
GenericCriterionResult generic_criterion(const RationalFunction& P, const RationalFunction& q,
                                         const Curve& gamma);

struct DoubleMomentReport {
    int i_max = 0, j_max = 0;
    double max_abs = 0;                     // largest |m_ij|
    std::optional<std::pair<int, int>> first_nonzero;
    bool exact = false;
    FactorReport factors;
    int vandermonde_rank = 0;               // distinct values Q(P^{-1}_i) at a sample
    bool forward_verified = false;          // supplied W validated and moments vanish
    std::string note;
};

/// Double moments m_ij = integral of P^i Q^j Q' dz. When a witness W is
/// supplied with P = Ptilde(W), Q = Qtilde(W), the forward direction of the
/// Wermer-type theorem is verified: W(gamma) closed, poles on one side, all
/// moments below tolerance.
DoubleMomentReport double_moment_check(const RationalFunction& P, const RationalFunction& Q,
                                       const Curve& gamma, int i_max, int j_max,
                                       const std::optional<RationalFunction>& W = std::nullopt,
                                       double tol = 1e-8);

/// Exact rational antiderivative via Hermite-Ostrogradsky reduction;
/// nullopt when the integral has a logarithmic part.
std::optional<RationalFunction> integrate_rational(const RationalFunction& q);

} // namespace mk

#endif
