#include "mk/branches.hpp"
#include "mk/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace mk {

namespace {

constexpr double kPi = std::numbers::pi;

struct NumPolyPair {
    std::vector<cplx> num, den, num_d, den_d;
    explicit NumPolyPair(const RationalFunction& P)
        : num(P.num().to_complex()), den(P.den().to_complex()),
          num_d(poly_derivative(num)), den_d(poly_derivative(den)) {}
    cplx f(const cplx& x, const cplx& t) const { return poly_eval(num, x) - t * poly_eval(den, x); }
    cplx fx(const cplx& x, const cplx& t) const {
        return poly_eval(num_d, x) - t * poly_eval(den_d, x);
    }
};

// Newton iteration on P(x) = t from a predictor value. Returns nullopt when
// the iteration stalls or leaves the basin.
std::optional<cplx> newton_solve(const NumPolyPair& p, cplx x, const cplx& t) {
    for (int it = 0; it < 12; ++it) {
        cplx fv = p.f(x, t);
        cplx dv = p.fx(x, t);
        if (std::abs(dv) < 1e-300) return std::nullopt;
        cplx step = fv / dv;
        if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) return std::nullopt;
        x -= step;
        if (std::abs(step) < 1e-13 * (1.0 + std::abs(x))) {
            double resid = std::abs(p.f(x, t));
            double scale = std::abs(poly_eval(p.num, x)) + std::abs(t) * std::abs(poly_eval(p.den, x)) + 1.0;
            if (resid <= 1e-9 * scale) return x;
            return std::nullopt;
        }
    }
    return std::nullopt;
}

double min_pairwise(const std::vector<cplx>& v) {
    double m = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j) m = std::min(m, std::abs(v[i] - v[j]));
    return m;
}

std::vector<cplx> track_leg(const NumPolyPair& p, const cplx& t0, const cplx& t1,
                            std::vector<cplx> x) {
    double s = 0.0;
    double h = 1.0;
    int halvings = 0;
    while (s < 1.0) {
        h = std::min(h, 1.0 - s);
        cplx t_from = t0 + s * (t1 - t0);
        cplx t_to = t0 + (s + h) * (t1 - t0);
        cplx dt = t_to - t_from;
        std::vector<cplx> pred(x.size()), next(x.size());
        bool ok = true;
        for (size_t i = 0; i < x.size(); ++i) {
            cplx dv = p.fx(x[i], t_from);
            pred[i] = (std::abs(dv) > 1e-300) ? x[i] + dt * poly_eval(p.den, x[i]) / dv : x[i];
            if (!std::isfinite(pred[i].real()) || !std::isfinite(pred[i].imag())) pred[i] = x[i];
        }
        double guard = min_pairwise(pred);
        for (size_t i = 0; i < x.size() && ok; ++i) {
            auto sol = newton_solve(p, pred[i], t_to);
            if (!sol || std::abs(*sol - pred[i]) > 0.3 * guard) ok = false;
            else next[i] = *sol;
        }
        if (ok) {
            double maxmag = 1.0;
            for (const auto& v : next) maxmag = std::max(maxmag, std::abs(v));
            if (min_pairwise(next) < 1e-9 * maxmag) ok = false;
        }
        if (!ok) {
            h *= 0.5;
            if (++halvings > 60) throw PathTooCloseToBranchPoint("track_fiber: step underflow");
            continue;
        }
        x = std::move(next);
        s += h;
        h *= 1.6;
        halvings = 0;
    }
    return x;
}

} // namespace

std::vector<cplx> track_fiber(const RationalFunction& P, const std::vector<cplx>& t_path,
                              const std::vector<cplx>& start_values) {
    if (t_path.size() < 2) return start_values;
    NumPolyPair p(P);
    std::vector<cplx> x = start_values;
    for (size_t i = 0; i < start_values.size(); ++i) {
        auto polished = newton_solve(p, x[i], t_path.front());
        if (!polished) throw NewtonDivergence("track_fiber: start values do not solve P(x)=t0");
        x[i] = *polished;
    }
    for (size_t leg = 0; leg + 1 < t_path.size(); ++leg)
        x = track_leg(p, t_path[leg], t_path[leg + 1], std::move(x));
    return x;
}

std::vector<std::vector<cplx>> track_fiber_trace(const RationalFunction& P,
                                                 const std::vector<cplx>& t_path,
                                                 const std::vector<cplx>& start_values) {
    NumPolyPair p(P);
    std::vector<std::vector<cplx>> trace;
    std::vector<cplx> x = start_values;
    for (size_t i = 0; i < x.size(); ++i) {
        auto polished = newton_solve(p, x[i], t_path.front());
        if (!polished) throw NewtonDivergence("track_fiber_trace: bad start values");
        x[i] = *polished;
    }
    trace.push_back(x);
    for (size_t leg = 0; leg + 1 < t_path.size(); ++leg) {
        x = track_leg(p, t_path[leg], t_path[leg + 1], std::move(x));
        trace.push_back(x);
    }
    return trace;
}

std::vector<cplx> finite_branch_points(const RationalFunction& P) {
    if (P.map_degree() < 1) throw DegenerateInput("finite_branch_points: constant function");
    Poly W = P.num().derivative() * P.den() - P.num() * P.den().derivative();
    std::vector<cplx> candidates;
    double den_scale = 1.0;
    for (const auto& r : poly_roots(P.den())) den_scale = std::max(den_scale, std::abs(r));
    for (const auto& x : poly_roots(W)) {
        cplx d = P.den().eval(x);
        cplx nmr = P.num().eval(x);
        // critical points that are (multiple) poles map to infinity, not to a
        // finite branch point
        if (std::abs(d) < 1e-8 * (1.0 + std::abs(nmr)) && std::abs(nmr) > 1e-12) continue;
        if (std::abs(d) < 1e-300) continue;
        candidates.push_back(nmr / d);
    }
    // critical point at infinity with finite value there
    if (auto v = P.value_at_infinity()) {
        Poly diff = P.num() - Poly::constant(*v) * P.den();
        long e = P.map_degree() - diff.degree();
        if (e >= 2) candidates.push_back(v->to_complex());
    }
    double scale = 1.0;
    for (const auto& c : candidates) scale = std::max(scale, std::abs(c));
    std::vector<cplx> out;
    for (const auto& cl : cluster_points(candidates, 1e-9 * scale)) out.push_back(cl.point);
    return out;
}

cplx BranchSystem::pole_point(size_t e) const {
    if (e >= poles_.points.size()) throw std::out_of_range("pole_point: pole at infinity");
    return poles_.points[e];
}

std::vector<cplx> BranchSystem::fiber_at(const cplx& t) const {
    return track_fiber(P_, {c_, t}, values_);
}

std::vector<cplx> BranchSystem::fiber_along(const std::vector<cplx>& t_path) const {
    return track_fiber(P_, t_path, values_);
}

std::vector<cplx> BranchSystem::sample_points(int count) const {
    std::vector<cplx> pts;
    double base = std::arg(c_);
    double r = std::abs(c_);
    for (int j = 0; j < count; ++j) {
        double s = count == 1 ? 0.15 : -0.3 + 0.6 * static_cast<double>(j) / (count - 1);
        if (std::abs(s) < 1e-3) s = 1e-3; // keep samples distinct from the basepoint
        pts.push_back(r * std::polar(1.0, base + s));
    }
    return pts;
}

LandingData BranchSystem::landings(const cplx& v) const {
    // Is v one of the branch points?
    int s_idx = -1;
    for (size_t s = 0; s < bpts_.size(); ++s)
        if (std::abs(v - bpts_[s]) < 1e-9 * (1.0 + std::abs(v))) s_idx = static_cast<int>(s);

    if (s_idx < 0) {
        // Ordinary value: full fiber lands on n distinct preimages.
        std::vector<cplx> land = fiber_at(v);
        LandingData ld;
        ld.cluster_of_branch.resize(land.size());
        for (size_t i = 0; i < land.size(); ++i) {
            ld.cluster_of_branch[i] = static_cast<int>(i);
            ld.cluster_points.push_back(land[i]);
        }
        return ld;
    }

    const cplx cs = bpts_[static_cast<size_t>(s_idx)];
    double d_s = std::abs(c_ - cs);
    for (size_t j = 0; j < bpts_.size(); ++j)
        if (static_cast<int>(j) != s_idx) d_s = std::min(d_s, std::abs(bpts_[j] - cs));
    cplx u = (c_ - cs) / std::abs(c_ - cs);
    const auto cycles = sigma_[static_cast<size_t>(s_idx)].cycles();

    double delta = 0.25 * d_s;
    for (int attempt = 0; attempt < 14; ++attempt) {
        std::vector<cplx> land = fiber_along({c_, cs + delta * u});
        // centroids per expected cycle
        std::vector<cplx> centroid(cycles.size(), cplx(0, 0));
        for (size_t k = 0; k < cycles.size(); ++k) {
            for (int i : cycles[k]) centroid[k] += land[static_cast<size_t>(i)];
            centroid[k] /= static_cast<double>(cycles[k].size());
        }
        double spread = 0;
        for (size_t k = 0; k < cycles.size(); ++k)
            for (int i : cycles[k]) spread = std::max(spread, std::abs(land[static_cast<size_t>(i)] - centroid[k]));
        double gap = std::numeric_limits<double>::infinity();
        for (size_t k = 0; k < cycles.size(); ++k)
            for (size_t l = k + 1; l < cycles.size(); ++l)
                gap = std::min(gap, std::abs(centroid[k] - centroid[l]));
        if (cycles.size() == 1 || spread < 0.2 * gap) {
            LandingData ld;
            ld.cluster_of_branch.resize(land.size());
            for (size_t k = 0; k < cycles.size(); ++k)
                for (int i : cycles[k]) ld.cluster_of_branch[static_cast<size_t>(i)] = static_cast<int>(k);
            ld.cluster_points = std::move(centroid);
            return ld;
        }
        delta *= 0.25;
    }
    throw MonodromyInconsistent("landings: clusters do not match the local cycle structure");
}

namespace {

Permutation match_permutation(const std::vector<cplx>& reference, const std::vector<cplx>& moved) {
    const size_t n = reference.size();
    const double sep = n > 1 ? min_pairwise(reference) : 1.0;
    std::vector<int> img(n, -1);
    std::vector<char> used(n, 0);
    for (size_t i = 0; i < n; ++i) {
        size_t best = 0;
        double bestd = std::numeric_limits<double>::infinity();
        for (size_t j = 0; j < n; ++j) {
            double d = std::abs(moved[i] - reference[j]);
            if (d < bestd) {
                bestd = d;
                best = j;
            }
        }
        if (used[best]) throw MonodromyInconsistent("loop tracking: end fiber is not a permutation");
        if (bestd > 0.25 * sep)
            throw MonodromyInconsistent("loop tracking: end value far from every branch");
        used[best] = 1;
        img[i] = static_cast<int>(best);
    }
    return Permutation(std::move(img));
}

std::vector<cplx> loop_waypoints(const cplx& c, const cplx& cs, double r, int circle_pts = 24) {
    std::vector<cplx> w;
    cplx u = (c - cs) / std::abs(c - cs);
    cplx A = cs + r * u;
    w.push_back(c);
    w.push_back(A);
    double a0 = std::arg(u);
    for (int j = 1; j <= circle_pts; ++j)
        w.push_back(cs + r * std::polar(1.0, a0 + 2 * kPi * j / circle_pts));
    w.push_back(c);
    return w;
}

} // namespace

BranchSystem monodromy(const RationalFunction& P, std::optional<cplx> basepoint) {
    if (P.map_degree() < 1) throw DegenerateInput("monodromy: constant function");
    BranchSystem bs;
    bs.P_ = P;
    bs.n_ = P.map_degree();
    bs.poles_ = pole_set(P);
    bs.bpts_ = finite_branch_points(P);

    double scale = 1.0;
    for (const auto& b : bs.bpts_) scale = std::max(scale, std::abs(b));
    bs.scale_ = scale;

    // Reject nearly coincident branch points rather than merging them.
    for (size_t i = 0; i < bs.bpts_.size(); ++i)
        for (size_t j = i + 1; j < bs.bpts_.size(); ++j)
            if (std::abs(bs.bpts_[i] - bs.bpts_[j]) < 1e-6 * scale)
                throw DegenerateInput("monodromy: branch points closer than 1e-6 (relative)");

    // per-branch-point safety radii
    std::vector<double> d(bs.bpts_.size());
    auto corridor_dist = [](const cplx& p, const cplx& a, const cplx& b) {
        cplx dir = b - a;
        double len2 = std::norm(dir);
        double t = len2 == 0 ? 0.0 : std::clamp(((p - a) * std::conj(dir)).real() / len2, 0.0, 1.0);
        return std::abs(p - (a + t * dir));
    };

    std::optional<cplx> vinf_c;
    if (auto v = P.value_at_infinity()) vinf_c = v->to_complex();

    auto candidate_ok = [&](const cplx& c) {
        for (size_t s = 0; s < bs.bpts_.size(); ++s) {
            d[s] = std::abs(c - bs.bpts_[s]);
            for (size_t j = 0; j < bs.bpts_.size(); ++j)
                if (j != s) d[s] = std::min(d[s], std::abs(bs.bpts_[j] - bs.bpts_[s]));
        }
        if (vinf_c && std::abs(c - *vinf_c) < 0.3 * scale) return false;
        for (size_t s = 0; s < bs.bpts_.size(); ++s)
            for (size_t j = 0; j < bs.bpts_.size(); ++j)
                if (j != s && corridor_dist(bs.bpts_[j], c, bs.bpts_[s]) < 0.4 * d[j]) return false;
        return true;
    };

    cplx c;
    if (basepoint) {
        c = *basepoint;
        if (!candidate_ok(c)) throw DegenerateInput("monodromy: supplied basepoint fails clearance");
    } else {
        bool found = false;
        for (double rho : {3.0, 4.0, 5.0, 6.5}) {
            for (int a = 0; a < 16 && !found; ++a) {
                cplx cand = rho * scale * std::polar(1.0, 0.7391 + a * 2 * kPi / 16);
                if (candidate_ok(cand)) {
                    c = cand;
                    found = true;
                }
            }
            if (found) break;
        }
        if (!found) throw DegenerateInput("monodromy: no admissible basepoint found");
    }
    bs.c_ = c;

    // fiber over c, labels by lexicographic (re, im)
    {
        std::vector<cplx> coeffs = P.num().to_complex();
        std::vector<cplx> dencoeffs = P.den().to_complex();
        coeffs.resize(std::max(coeffs.size(), dencoeffs.size()), cplx(0, 0));
        for (size_t i = 0; i < dencoeffs.size(); ++i) coeffs[i] -= c * dencoeffs[i];
        std::vector<cplx> roots = poly_roots(coeffs);
        if (static_cast<long>(roots.size()) != bs.n_)
            throw MonodromyInconsistent("monodromy: fiber size mismatch at basepoint");
        std::sort(roots.begin(), roots.end(), [](const cplx& x, const cplx& y) {
            if (x.real() != y.real()) return x.real() < y.real();
            return x.imag() < y.imag();
        });
        double maxmag = 1.0;
        for (const auto& r : roots) maxmag = std::max(maxmag, std::abs(r));
        if (min_pairwise(roots) < 1e-8 * maxmag && bs.n_ > 1)
            throw DegenerateInput("monodromy: fiber over basepoint nearly degenerate");
        bs.values_ = std::move(roots);
    }

    // loop ordering: counterclockwise from the widest angular gap
    std::vector<size_t> order(bs.bpts_.size());
    double theta_cut = 0;
    {
        std::vector<double> args;
        for (const auto& b : bs.bpts_) args.push_back(std::arg(b - c));
        std::vector<double> sorted = args;
        std::sort(sorted.begin(), sorted.end());
        if (!sorted.empty()) {
            double best_gap = -1;
            for (size_t i = 0; i < sorted.size(); ++i) {
                double next = (i + 1 < sorted.size()) ? sorted[i + 1] : sorted[0] + 2 * kPi;
                if (next - sorted[i] > best_gap) {
                    best_gap = next - sorted[i];
                    theta_cut = sorted[i] + 0.5 * (next - sorted[i]);
                }
            }
        }
        std::iota(order.begin(), order.end(), 0);
        auto key = [&](size_t s) {
            double a = args[s] - theta_cut;
            while (a <= 0) a += 2 * kPi;
            return a;
        };
        std::sort(order.begin(), order.end(), [&](size_t x, size_t y) { return key(x) < key(y); });
    }

    std::vector<cplx> bpts_sorted;
    for (size_t s : order) bpts_sorted.push_back(bs.bpts_[s]);
    bs.bpts_ = std::move(bpts_sorted);
    for (size_t s = 0; s < bs.bpts_.size(); ++s) {
        d[s] = std::abs(c - bs.bpts_[s]);
        for (size_t j = 0; j < bs.bpts_.size(); ++j)
            if (j != s) d[s] = std::min(d[s], std::abs(bs.bpts_[j] - bs.bpts_[s]));
    }

    // generators
    for (size_t s = 0; s < bs.bpts_.size(); ++s) {
        auto wp = loop_waypoints(c, bs.bpts_[s], 0.25 * d[s]);
        std::vector<cplx> moved = track_fiber(P, wp, bs.values_);
        Permutation sig = match_permutation(bs.values_, moved);
        if (sig.is_identity())
            throw MonodromyInconsistent("monodromy: trivial permutation at a branch point");
        bs.sigma_.push_back(std::move(sig));
    }

    // independently tracked loop at infinity (big counterclockwise circle)
    {
        double r_big = 2.0;
        for (const auto& b : bs.bpts_) r_big = std::max(r_big, 2.5 * std::abs(b - c));
        std::vector<cplx> wp;
        wp.push_back(c);
        cplx C0 = c + r_big * std::polar(1.0, theta_cut);
        wp.push_back(C0);
        for (int j = 1; j <= 48; ++j)
            wp.push_back(c + r_big * std::polar(1.0, theta_cut + 2 * kPi * j / 48));
        wp.push_back(c);
        std::vector<cplx> moved = track_fiber(P, wp, bs.values_);
        Permutation big = match_permutation(bs.values_, moved);
        Permutation prod = Permutation::identity(static_cast<int>(bs.n_));
        for (const auto& s : bs.sigma_) prod = s * prod;
        if (!(prod == big))
            throw MonodromyInconsistent("monodromy: product relation violated");
        bs.sigma_inf_ = big.inverse();
    }

    // Riemann-Hurwitz validation over all branch values including infinity
    {
        long total = bs.n_ - bs.sigma_inf_.cycle_count();
        for (const auto& s : bs.sigma_) total += bs.n_ - s.cycle_count();
        if (total != 2 * bs.n_ - 2)
            throw MonodromyInconsistent("monodromy: Riemann-Hurwitz count failed");
    }

    // J sets: track outward along the cut direction and classify by pole
    {
        size_t npoles = bs.pole_count();
        double pole_scale = 1.0;
        for (const auto& p : bs.poles_.points) pole_scale = std::max(pole_scale, std::abs(p));
        double pole_sep = std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < bs.poles_.points.size(); ++i)
            for (size_t j = i + 1; j < bs.poles_.points.size(); ++j)
                pole_sep = std::min(pole_sep, std::abs(bs.poles_.points[i] - bs.poles_.points[j]));
        double r_t = 1e6 * std::max(scale, std::abs(c));
        bool done = false;
        for (int attempt = 0; attempt < 3 && !done; ++attempt, r_t *= 100.0) {
            cplx T = c + r_t * std::polar(1.0, theta_cut);
            std::vector<cplx> far = bs.fiber_along({c, c + 0.5 * r_t * std::polar(1.0, theta_cut), T});
            std::vector<std::vector<int>> J(npoles);
            bool valid = true;
            for (size_t i = 0; i < far.size() && valid; ++i) {
                if (std::abs(far[i]) > 5.0 * (1.0 + pole_scale)) {
                    if (!bs.poles_.at_infinity) valid = false;
                    else J[npoles - 1].push_back(static_cast<int>(i));
                    continue;
                }
                size_t best = 0;
                double bd = std::numeric_limits<double>::infinity();
                for (size_t e = 0; e < bs.poles_.points.size(); ++e) {
                    double dd = std::abs(far[i] - bs.poles_.points[e]);
                    if (dd < bd) {
                        bd = dd;
                        best = e;
                    }
                }
                double limit = 0.25 * std::min(pole_sep, 1.0 + pole_scale);
                if (bd > limit) valid = false;
                else J[best].push_back(static_cast<int>(i));
            }
            if (valid) {
                for (size_t e = 0; e < npoles && valid; ++e)
                    if (static_cast<int>(J[e].size()) != bs.pole_order(e)) valid = false;
            }
            if (valid) {
                bs.J_ = std::move(J);
                done = true;
            }
        }
        if (!done) throw MonodromyInconsistent("monodromy: branch-to-pole classification failed");
    }

    return bs;
}

} // namespace mk
