#ifndef MK_CURVE_HPP
#define MK_CURVE_HPP

#include "mk/rational_function.hpp"

#include <functional>
#include <map>
#include <vector>

namespace mk {

struct NotClosed : std::runtime_error {
    explicit NotClosed(const std::string& m) : std::runtime_error(m) {}
};
struct TooCloseToCurve : std::runtime_error {
    explicit TooCloseToCurve(const std::string& m) : std::runtime_error(m) {}
};
struct PoleOnCurve : std::runtime_error {
    explicit PoleOnCurve(const std::string& m) : std::runtime_error(m) {}
};
struct SingularOnPath : std::runtime_error {
    explicit SingularOnPath(const std::string& m) : std::runtime_error(m) {}
};
struct NoConvergence : std::runtime_error {
    explicit NoConvergence(const std::string& m) : std::runtime_error(m) {}
};

/// One oriented piece of a path: a straight segment or a circular arc.
struct Segment {
    enum class Kind { Line, Arc };
    Kind kind = Kind::Line;
    cplx a, b;      // line endpoints
    cplx center;    // arc data
    double radius = 0, ang0 = 0, ang1 = 0;

    static Segment line(cplx from, cplx to) {
        Segment s;
        s.kind = Kind::Line;
        s.a = from;
        s.b = to;
        return s;
    }
    static Segment arc(cplx center, double radius, double from_angle, double to_angle) {
        Segment s;
        s.kind = Kind::Arc;
        s.center = center;
        s.radius = radius;
        s.ang0 = from_angle;
        s.ang1 = to_angle;
        return s;
    }

    cplx point(double t) const;
    cplx velocity(double t) const; // dz/dt on [0,1]
    cplx start() const { return point(0.0); }
    cplx end() const { return point(1.0); }
};

/// Oriented piecewise path. Consecutive segments must share endpoints
/// (tolerance 1e-12 relative); closed paths return to their start.
/// Transversality of self-intersections is assumed, not validated.
class Curve {
public:
    Curve(std::vector<Segment> segments, bool closed);

    static Curve unit_circle(int turns = 1);
    static Curve circle(cplx center, double radius, int turns = 1);
    static Curve line_segment(cplx a, cplx b);
    static Curve polyline(const std::vector<cplx>& pts, bool closed);
    static Curve square(cplx center, double half_side);

    const std::vector<Segment>& segments() const { return segs_; }
    bool closed() const { return closed_; }
    cplx start() const { return segs_.front().start(); }
    cplx end() const { return segs_.back().end(); }

    /// True for a single CCW unit-circle arc about 0 (one full turn);
    /// enables the exact moment path.
    bool is_unit_circle() const;

    double min_distance(const cplx& z, int samples_per_segment = 64) const;
    /// Dense point sampling along the path (for image curves and windings).
    std::vector<cplx> sample(int per_segment = 128) const;

private:
    std::vector<Segment> segs_;
    bool closed_;
};

/// Winding number of a closed curve about z, by adaptive argument summation.
/// Throws NotClosed / TooCloseToCurve.
int winding_number(const Curve& curve, const cplx& z, double tol = 1e-8);

/// Continuous increment of log(w - z) as w runs along the (not necessarily
/// closed) curve: log|end-z| - log|start-z| + i * (argument increment).
cplx log_increment(const Curve& curve, const cplx& z, double tol = 1e-12);

/// Winding number of a closed polyline about z.
int winding_number_polyline(const std::vector<cplx>& pts, const cplx& z, double tol = 1e-10);

struct QuadratureResult {
    cplx value;
    double error;
};

/// Adaptive Gauss-Kronrod 7/15 contour integral of f along the curve.
/// Throws NoConvergence when the estimate cannot be driven near the target.
QuadratureResult contour_integral(const std::function<cplx(const cplx&)>& f, const Curve& curve,
                                  double target = 1e-10);

/// Integral of (z-beta)^l dz along the curve, exact up to quadrature-free
/// endpoint evaluation (l != -1) or a log increment (l == -1).
cplx power_integral(const Curve& curve, const cplx& beta, long l);

/// Pole positions of a rational function: finite poles with multiplicity,
/// plus a flag for the pole at infinity.
struct PoleSet {
    std::vector<cplx> points;        // deduplicated finite poles
    std::vector<int> multiplicities; // matching entries
    bool at_infinity = false;
    int infinity_multiplicity = 0;
};
PoleSet pole_set(const RationalFunction& f, double cluster_tol = 1e-9);

struct SideVerdict {
    enum class Kind { OneSide, Outside, Mixed };
    Kind kind = Kind::Mixed;
    int mu = 0;                         // common winding when OneSide/Outside
    std::map<int, int> windings;        // pole index -> winding (infinity last, always 0)
    PoleSet poles;
};

/// Classify poles of P against gamma: all windings equal -> OneSide (mu);
/// additionally zero -> Outside. Non-closed curves are Mixed by definition.
/// The pole at infinity carries winding 0 by convention.
SideVerdict poles_one_side(const RationalFunction& P, const Curve& gamma, double tol = 1e-8);

} // namespace mk

#endif
