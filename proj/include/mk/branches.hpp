#ifndef MK_BRANCHES_HPP
#define MK_BRANCHES_HPP

#include "mk/curve.hpp"
#include "mk/permutation.hpp"
#include "mk/rational_function.hpp"

#include <optional>

namespace mk {

struct DegenerateInput : std::runtime_error {
    explicit DegenerateInput(const std::string& m) : std::runtime_error(m) {}
};
struct PathTooCloseToBranchPoint : std::runtime_error {
    explicit PathTooCloseToBranchPoint(const std::string& m) : std::runtime_error(m) {}
};
struct NewtonDivergence : std::runtime_error {
    explicit NewtonDivergence(const std::string& m) : std::runtime_error(m) {}
};
struct BranchCollision : std::runtime_error {
    explicit BranchCollision(const std::string& m) : std::runtime_error(m) {}
};
struct MonodromyInconsistent : std::runtime_error {
    explicit MonodromyInconsistent(const std::string& m) : std::runtime_error(m) {}
};

/// Finite branch points of P^{-1} (critical values of P, including the one
/// coming from a critical point at infinity when P(infinity) is finite),
/// deduplicated within 1e-9 relative tolerance.
std::vector<cplx> finite_branch_points(const RationalFunction& P);

/// Numerical continuation of the full fiber P(x) = t along a polyline of
/// t-waypoints. Euler predictor, Newton corrector, adaptive step halving,
/// pairwise-separation guard. Returns end values in start order.
std::vector<cplx> track_fiber(const RationalFunction& P, const std::vector<cplx>& t_path,
                              const std::vector<cplx>& start_values);

/// As track_fiber, but records the fiber at every waypoint of the path.
/// trace[w][i] is branch i at waypoint w.
std::vector<std::vector<cplx>> track_fiber_trace(const RationalFunction& P,
                                                 const std::vector<cplx>& t_path,
                                                 const std::vector<cplx>& start_values);

/// Branch landing clusters when the fiber is tracked from the basepoint
/// along a corridor toward a marked value: which branches coalesce where.
struct LandingData {
    std::vector<int> cluster_of_branch; // branch -> cluster id
    std::vector<cplx> cluster_points;   // cluster id -> approximate preimage
};

/// Monodromy data of P^{-1} over a basepoint c: branch values, generator
/// loops around the finite branch points (ordered counterclockwise from an
/// angular gap), the independently tracked loop at infinity, and the
/// classification of branches by the pole they approach as t -> infinity.
class BranchSystem {
public:
    const RationalFunction& P() const { return P_; }
    long n() const { return n_; }
    cplx basepoint() const { return c_; }
    const std::vector<cplx>& branch_values() const { return values_; }
    const std::vector<cplx>& branch_points() const { return bpts_; }
    const std::vector<Permutation>& generators() const { return sigma_; }
    const Permutation& sigma_infinity() const { return sigma_inf_; }
    const PoleSet& poles() const { return poles_; }
    /// Pole count including infinity when present.
    size_t pole_count() const { return poles_.points.size() + (poles_.at_infinity ? 1 : 0); }
    /// J[e]: branch indices approaching pole e (finite poles first, the pole
    /// at infinity last when present).
    const std::vector<std::vector<int>>& J() const { return J_; }
    int pole_order(size_t e) const {
        return e < poles_.points.size() ? poles_.multiplicities[e] : poles_.infinity_multiplicity;
    }
    cplx pole_point(size_t e) const; // throws for the pole at infinity

    PermGroup group() const { return PermGroup(static_cast<int>(n_), sigma_); }

    /// Fiber over t, tracked from the basepoint along a straight segment;
    /// order matches branch labels.
    std::vector<cplx> fiber_at(const cplx& t) const;
    /// Fiber tracked along an explicit waypoint path starting at the basepoint.
    std::vector<cplx> fiber_along(const std::vector<cplx>& t_path) const;

    /// Sample points for identity testing: a short arc about the basepoint,
    /// safely inside the simply connected tracked region.
    std::vector<cplx> sample_points(int count) const;

    /// Landing clusters for a marked value v (a branch point or an augmented
    /// endpoint value): tracks along the corridor from the basepoint.
    LandingData landings(const cplx& v) const;

    friend BranchSystem monodromy(const RationalFunction& P, std::optional<cplx> basepoint);

private:
    RationalFunction P_;
    long n_ = 0;
    cplx c_;
    double scale_ = 1.0;
    std::vector<cplx> values_;
    std::vector<cplx> bpts_;
    std::vector<Permutation> sigma_;
    Permutation sigma_inf_;
    PoleSet poles_;
    std::vector<std::vector<int>> J_;
};

/// Computes the full monodromy of P^{-1}. Throws DegenerateInput for constant
/// P or branch points closer than 1e-6 (relative), MonodromyInconsistent when
/// the product relation or the Riemann-Hurwitz count fails to validate.
BranchSystem monodromy(const RationalFunction& P, std::optional<cplx> basepoint = std::nullopt);

} // namespace mk

#endif
