#include "mk/curve.hpp"
#include "mk/roots.hpp"

#include <cmath>
#include <numbers>

namespace mk {

namespace {
constexpr double kPi = std::numbers::pi;
}

cplx Segment::point(double t) const {
    if (kind == Kind::Line) return a + t * (b - a);
    double ang = ang0 + t * (ang1 - ang0);
    return center + radius * cplx(std::cos(ang), std::sin(ang));
}

cplx Segment::velocity(double t) const {
    if (kind == Kind::Line) return b - a;
    double ang = ang0 + t * (ang1 - ang0);
    return radius * (ang1 - ang0) * cplx(-std::sin(ang), std::cos(ang));
}

Curve::Curve(std::vector<Segment> segments, bool closed) : segs_(std::move(segments)), closed_(closed) {
    if (segs_.empty()) throw std::invalid_argument("Curve: no segments");
    double scale = 0;
    for (const auto& s : segs_) scale = std::max({scale, std::abs(s.start()), std::abs(s.end())});
    double tol = 1e-12 * std::max(1.0, scale);
    for (size_t i = 0; i + 1 < segs_.size(); ++i)
        if (std::abs(segs_[i].end() - segs_[i + 1].start()) > tol)
            throw std::invalid_argument("Curve: consecutive segments do not share endpoints");
    if (closed_ && std::abs(segs_.back().end() - segs_.front().start()) > tol)
        throw std::invalid_argument("Curve: closed flag but endpoints differ");
}

Curve Curve::unit_circle(int turns) { return circle(cplx(0, 0), 1.0, turns); }

Curve Curve::circle(cplx center, double radius, int turns) {
    std::vector<Segment> segs;
    int n = std::abs(turns);
    double dir = turns >= 0 ? 1.0 : -1.0;
    for (int i = 0; i < std::max(1, n); ++i)
        segs.push_back(Segment::arc(center, radius, dir * 2 * kPi * i, dir * 2 * kPi * (i + 1)));
    return Curve(std::move(segs), true);
}

Curve Curve::line_segment(cplx a, cplx b) { return Curve({Segment::line(a, b)}, false); }

Curve Curve::polyline(const std::vector<cplx>& pts, bool closed) {
    if (pts.size() < 2) throw std::invalid_argument("Curve::polyline: need at least 2 points");
    std::vector<Segment> segs;
    for (size_t i = 0; i + 1 < pts.size(); ++i) segs.push_back(Segment::line(pts[i], pts[i + 1]));
    if (closed && std::abs(pts.back() - pts.front()) > 0) segs.push_back(Segment::line(pts.back(), pts.front()));
    return Curve(std::move(segs), closed);
}

Curve Curve::square(cplx center, double h) {
    cplx c = center;
    std::vector<Segment> segs = {
        Segment::line(c + cplx(-h, -h), c + cplx(h, -h)),
        Segment::line(c + cplx(h, -h), c + cplx(h, h)),
        Segment::line(c + cplx(h, h), c + cplx(-h, h)),
        Segment::line(c + cplx(-h, h), c + cplx(-h, -h)),
    };
    return Curve(std::move(segs), true);
}

bool Curve::is_unit_circle() const {
    if (!closed_) return false;
    double total = 0;
    for (const auto& s : segs_) {
        if (s.kind != Segment::Kind::Arc) return false;
        if (std::abs(s.center) > 1e-14 || std::abs(s.radius - 1.0) > 1e-14) return false;
        total += s.ang1 - s.ang0;
    }
    return std::abs(total - 2 * kPi) < 1e-12;
}

double Curve::min_distance(const cplx& z, int samples_per_segment) const {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& s : segs_) {
        if (s.kind == Segment::Kind::Line) {
            cplx d = s.b - s.a;
            double len2 = std::norm(d);
            double t = len2 == 0 ? 0.0 : std::clamp(((z - s.a) * std::conj(d)).real() / len2, 0.0, 1.0);
            best = std::min(best, std::abs(z - (s.a + t * d)));
        } else {
            for (int i = 0; i <= samples_per_segment; ++i) {
                double t = static_cast<double>(i) / samples_per_segment;
                best = std::min(best, std::abs(z - s.point(t)));
            }
        }
    }
    return best;
}

std::vector<cplx> Curve::sample(int per_segment) const {
    std::vector<cplx> pts;
    pts.push_back(segs_.front().start());
    for (const auto& s : segs_)
        for (int i = 1; i <= per_segment; ++i)
            pts.push_back(s.point(static_cast<double>(i) / per_segment));
    return pts;
}

namespace {

// Argument increment of (segment(t) - z) over [t0, t1], by bisection until
// each piece subtends a reliably principal angle.
double seg_arg_increment(const Segment& s, const cplx& z, double t0, double t1, double tol, int depth) {
    cplx r0 = s.point(t0) - z;
    cplx r1 = s.point(t1) - z;
    double m = std::min(std::abs(r0), std::abs(r1));
    if (m < tol) throw TooCloseToCurve("argument tracking: point too close to path");
    if (depth > 60) throw TooCloseToCurve("argument tracking: subdivision limit");
    bool need_split = std::abs(r1 - r0) > 0.5 * m;
    if (s.kind == Segment::Kind::Arc && std::abs(s.ang1 - s.ang0) * (t1 - t0) > kPi / 4) need_split = true;
    if (!need_split) return std::arg(r1 / r0);
    double tm = 0.5 * (t0 + t1);
    return seg_arg_increment(s, z, t0, tm, tol, depth + 1) + seg_arg_increment(s, z, tm, t1, tol, depth + 1);
}

double curve_arg_increment(const Curve& curve, const cplx& z, double tol) {
    double total = 0;
    for (const auto& s : curve.segments()) total += seg_arg_increment(s, z, 0.0, 1.0, tol, 0);
    return total;
}

} // namespace

int winding_number(const Curve& curve, const cplx& z, double tol) {
    if (!curve.closed()) throw NotClosed("winding_number: curve is not closed");
    double total = curve_arg_increment(curve, z, tol) / (2 * kPi);
    double rounded = std::round(total);
    if (std::abs(total - rounded) > 0.1)
        throw TooCloseToCurve("winding_number: residual too large");
    return static_cast<int>(rounded);
}

cplx log_increment(const Curve& curve, const cplx& z, double tol) {
    double darg = curve_arg_increment(curve, z, tol);
    double dmod = std::log(std::abs(curve.end() - z)) - std::log(std::abs(curve.start() - z));
    return cplx(dmod, darg);
}

int winding_number_polyline(const std::vector<cplx>& pts, const cplx& z, double tol) {
    double total = 0;
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
        Segment s = Segment::line(pts[i], pts[i + 1]);
        total += seg_arg_increment(s, z, 0.0, 1.0, tol, 0);
    }
    if (std::abs(pts.back() - pts.front()) > 0) {
        Segment s = Segment::line(pts.back(), pts.front());
        total += seg_arg_increment(s, z, 0.0, 1.0, tol, 0);
    }
    double w = total / (2 * kPi);
    double rounded = std::round(w);
    if (std::abs(w - rounded) > 0.1) throw TooCloseToCurve("polyline winding: residual too large");
    return static_cast<int>(rounded);
}

namespace {

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1].
constexpr double kXgk[8] = {0.991455371120813, 0.949107912342759, 0.864864423359769,
                            0.741531185599394, 0.586087235467691, 0.405845151377397,
                            0.207784955007898, 0.0};
constexpr double kWgk[8] = {0.022935322010529, 0.063092092629979, 0.104790010322250,
                            0.140653259715525, 0.169004726639267, 0.190350578064785,
                            0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                           0.417959183673469};

struct GkEstimate {
    cplx value;
    double error;
};

GkEstimate gk15(const std::function<cplx(double)>& g, double t0, double t1) {
    double c = 0.5 * (t0 + t1), h = 0.5 * (t1 - t0);
    cplx resk(0, 0), resg(0, 0);
    for (int j = 0; j < 8; ++j) {
        cplx fv1 = g(c - h * kXgk[j]);
        cplx fv2 = (j == 7) ? fv1 : g(c + h * kXgk[j]);
        cplx sum = (j == 7) ? fv1 : (fv1 + fv2);
        resk += kWgk[j] * sum;
        if (j % 2 == 1) resg += kWg[j / 2] * sum;
    }
    resk *= h;
    resg *= h;
    double err = std::abs(resk - resg);
    err = std::pow(200.0 * err, 1.5);
    if (!std::isfinite(err)) err = std::abs(resk - resg);
    return {resk, std::min(err, std::abs(resk - resg) * 200.0 + 1e-300)};
}

} // namespace

QuadratureResult contour_integral(const std::function<cplx(const cplx&)>& f, const Curve& curve,
                                  double target) {
    cplx total(0, 0);
    double err_total = 0;
    double per_seg_target = target / static_cast<double>(curve.segments().size());
    for (const auto& s : curve.segments()) {
        auto g = [&](double t) { return f(s.point(t)) * s.velocity(t); };
        struct Piece {
            double t0, t1;
            GkEstimate est;
        };
        std::vector<Piece> heap;
        heap.push_back({0.0, 1.0, gk15(g, 0.0, 1.0)});
        auto total_err = [&] {
            double e = 0;
            for (const auto& p : heap) e += p.est.error;
            return e;
        };
        int budget = 4000;
        while (total_err() > per_seg_target && static_cast<int>(heap.size()) < budget) {
            size_t worst = 0;
            for (size_t i = 1; i < heap.size(); ++i)
                if (heap[i].est.error > heap[worst].est.error) worst = i;
            Piece p = heap[worst];
            if (p.t1 - p.t0 < 1e-14) break;
            double tm = 0.5 * (p.t0 + p.t1);
            heap[worst] = {p.t0, tm, gk15(g, p.t0, tm)};
            heap.push_back({tm, p.t1, gk15(g, tm, p.t1)});
        }
        cplx seg_val(0, 0);
        double seg_err = 0;
        for (const auto& p : heap) {
            seg_val += p.est.value;
            seg_err += p.est.error;
        }
        if (!std::isfinite(seg_val.real()) || !std::isfinite(seg_val.imag()))
            throw SingularOnPath("contour_integral: non-finite integrand on path");
        total += seg_val;
        err_total += seg_err;
    }
    if (err_total > 1e-5 * std::max(1.0, std::abs(total)))
        throw NoConvergence("contour_integral: adaptive refinement failed to converge");
    return {total, err_total};
}

cplx power_integral(const Curve& curve, const cplx& beta, long l) {
    if (l == -1) return log_increment(curve, beta);
    double e = static_cast<double>(l + 1);
    cplx w1 = curve.end() - beta, w0 = curve.start() - beta;
    return (std::pow(w1, e) - std::pow(w0, e)) / e;
}

PoleSet pole_set(const RationalFunction& f, double cluster_tol) {
    PoleSet ps;
    auto rts = poly_roots(f.den());
    double scale = 1.0;
    for (const auto& r : rts) scale = std::max(scale, std::abs(r));
    for (const auto& cl : cluster_points(rts, cluster_tol * scale)) {
        ps.points.push_back(cl.point);
        ps.multiplicities.push_back(cl.multiplicity);
    }
    if (f.has_pole_at_infinity()) {
        ps.at_infinity = true;
        ps.infinity_multiplicity = static_cast<int>(f.num().degree() - f.den().degree());
    }
    return ps;
}

SideVerdict poles_one_side(const RationalFunction& P, const Curve& gamma, double tol) {
    SideVerdict v;
    v.poles = pole_set(P);
    for (const auto& p : v.poles.points)
        if (gamma.min_distance(p) < tol) throw PoleOnCurve("poles_one_side: pole on the curve");
    if (!gamma.closed()) {
        v.kind = SideVerdict::Kind::Mixed;
        return v;
    }
    bool first = true;
    bool all_equal = true;
    int common = 0;
    for (size_t i = 0; i < v.poles.points.size(); ++i) {
        int w = winding_number(gamma, v.poles.points[i], tol);
        v.windings[static_cast<int>(i)] = w;
        if (first) {
            common = w;
            first = false;
        } else if (w != common) {
            all_equal = false;
        }
    }
    if (v.poles.at_infinity) {
        v.windings[-1] = 0; // infinity is outside every bounded curve
        if (first) {
            common = 0;
            first = false;
        } else if (common != 0) {
            all_equal = false;
        }
    }
    if (all_equal) {
        v.mu = common;
        v.kind = common == 0 ? SideVerdict::Kind::Outside : SideVerdict::Kind::OneSide;
    } else {
        v.kind = SideVerdict::Kind::Mixed;
    }
    return v;
}

} // namespace mk
