#ifndef MK_CONSTELLATION_HPP
#define MK_CONSTELLATION_HPP

#include "mk/branches.hpp"

namespace mk {

struct FacePoleMismatch : std::runtime_error {
    explicit FacePoleMismatch(const std::string& m) : std::runtime_error(m) {}
};

/// One oriented incidence step of a skeleton walk: star center -> marked
/// vertex when sign = +1, marked vertex -> star center when sign = -1.
/// Contributes sign * 1 to the coefficient f[color][star].
struct WalkStep {
    int color;
    int star;
    int sign;
};

/// The combinatorial map lambda_P = P^{-1}(star system): n star centers of
/// degree k, marked vertices per color given by the cycles of sigma_s, faces
/// in bijection with the poles of P. Face boundaries are traced with the
/// face kept on the left, so each face row matrix records the signed marked
/// vertex passages of that boundary.
class Constellation {
public:
    struct Face {
        std::vector<int> support;           // branches of the sigma_inf cycle
        int pole;                           // pole index (finite first, infinity last)
        std::vector<std::vector<long>> rows; // k x n signed passage counts
    };

    /// Builds the map from monodromy data; `extra_marked` augments the color
    /// set with endpoint values of a non-closed curve (values equal to an
    /// existing branch point are not duplicated). Their permutations are
    /// identities and they do not alter the face structure.
    Constellation(const BranchSystem& bs, const std::vector<cplx>& extra_marked = {});

    const BranchSystem& branch_system() const { return bs_; }
    int n() const { return n_; }
    int k() const { return k_; }
    const std::vector<cplx>& marked_values() const { return marked_; }
    const std::vector<Permutation>& sigma() const { return sigma_; }
    const std::vector<Face>& faces() const { return faces_; }
    int face_of_pole(int pole_index) const;
    /// Color whose marked value matches v (1e-9 relative); -1 if none.
    int color_of_value(const cplx& v) const;

private:
    void trace_faces();
    BranchSystem bs_;
    int n_ = 0, k_ = 0;
    std::vector<cplx> marked_;
    std::vector<Permutation> sigma_;
    std::vector<Face> faces_;
};

/// Result of deforming gamma into the skeleton.
struct Deformation {
    bool closed = true;
    /// Closed case: multiplicity per face, normalized to minimize the sum of
    /// absolute values (the coefficient system is invariant under the shift).
    std::vector<long> face_multiplicities;
    /// Non-closed case: base walk plus homology corrections per face.
    std::vector<WalkStep> walk;
    std::vector<long> corrections;
};

/// Integer coefficient system f[s][i] of the equations
///   phi_s(z) = sum_i f[s][i] * (q/P')(P^{-1}_i(z)) = 0.
struct CoefficientSystem {
    int k = 0, n = 0;
    std::vector<std::vector<long>> f;
    bool all_zero() const {
        for (const auto& row : f)
            for (long v : row)
                if (v != 0) return false;
        return true;
    }
    std::vector<long> row_sums() const {
        std::vector<long> out;
        for (const auto& row : f) {
            long s = 0;
            for (long v : row) s += v;
            out.push_back(s);
        }
        return out;
    }
};

/// Deform gamma into the skeleton: face multiplicities from pole windings
/// (closed), or a vertex-to-vertex walk plus winding corrections (non-closed).
Deformation deform_to_skeleton(const Curve& gamma, const Constellation& c);

/// Assemble the coefficient system from a deformation.
CoefficientSystem coefficient_system(const Constellation& c, const Deformation& d);

/// Rows recomputed from an explicit stored walk (fixture support).
CoefficientSystem walk_rows(int k, int n, const std::vector<WalkStep>& walk);

} // namespace mk

#endif
