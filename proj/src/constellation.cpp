#include "mk/constellation.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace mk {

Constellation::Constellation(const BranchSystem& bs, const std::vector<cplx>& extra_marked)
    : bs_(bs), n_(static_cast<int>(bs.n())) {
    marked_ = bs.branch_points();
    sigma_ = bs.generators();
    for (const auto& v : extra_marked) {
        bool dup = false;
        for (const auto& m : marked_)
            if (std::abs(v - m) < 1e-9 * (1.0 + std::abs(v))) dup = true;
        if (!dup) {
            marked_.push_back(v);
            sigma_.push_back(Permutation::identity(n_));
        }
    }
    k_ = static_cast<int>(marked_.size());
    trace_faces();
}

int Constellation::face_of_pole(int pole_index) const {
    for (size_t f = 0; f < faces_.size(); ++f)
        if (faces_[f].pole == pole_index) return static_cast<int>(f);
    throw FacePoleMismatch("face_of_pole: no face for pole");
}

int Constellation::color_of_value(const cplx& v) const {
    for (int s = 0; s < k_; ++s)
        if (std::abs(v - marked_[static_cast<size_t>(s)]) < 1e-9 * (1.0 + std::abs(v))) return s;
    return -1;
}

void Constellation::trace_faces() {
    const size_t npoles = bs_.pole_count();
    faces_.clear();

    if (k_ == 0) {
        // Moebius map: one branch, one pole, empty equation system.
        if (n_ != 1 || npoles != 1)
            throw FacePoleMismatch("trace_faces: colorless map must be a Moebius function");
        Face f;
        f.support = {0};
        f.pole = 0;
        faces_.push_back(std::move(f));
        return;
    }

    // Darts: out(i,s) = center_i -> s-vertex, in(i,s) = s-vertex -> center_i.
    // Face tracing keeps the face on the left:
    //   out(i,s) -> in(sigma_s(i), s),   in(i,s) -> out(i, s+1 mod k).
    auto out_id = [&](int i, int s) { return 2 * (s * n_ + i); };
    auto in_id = [&](int i, int s) { return 2 * (s * n_ + i) + 1; };
    const int ndarts = 2 * n_ * k_;
    std::vector<int> face_of(static_cast<size_t>(ndarts), -1);

    for (int d0 = 0; d0 < ndarts; ++d0) {
        if (face_of[static_cast<size_t>(d0)] != -1) continue;
        Face face;
        face.rows.assign(static_cast<size_t>(k_), std::vector<long>(static_cast<size_t>(n_), 0));
        int fid = static_cast<int>(faces_.size());
        int d = d0;
        do {
            face_of[static_cast<size_t>(d)] = fid;
            int s = (d / 2) / n_;
            int i = (d / 2) % n_;
            bool outward = (d % 2) == 0;
            if (outward) {
                face.rows[static_cast<size_t>(s)][static_cast<size_t>(i)] += 1;
                if (s == 0) face.support.push_back(i);
                d = in_id(sigma_[static_cast<size_t>(s)](i), s);
            } else {
                face.rows[static_cast<size_t>(s)][static_cast<size_t>(i)] -= 1;
                d = out_id(i, (s + 1) % k_);
            }
        } while (d != d0);
        std::sort(face.support.begin(), face.support.end());
        face.pole = -1;
        faces_.push_back(std::move(face));
    }

    // Euler characteristic of the induced map must be 2.
    long V = n_;
    for (const auto& s : sigma_) V += s.cycle_count();
    long E = static_cast<long>(n_) * k_;
    long F = static_cast<long>(faces_.size());
    if (V - E + F != 2)
        throw FacePoleMismatch("trace_faces: Euler characteristic check failed");
    if (faces_.size() != npoles)
        throw FacePoleMismatch("trace_faces: face count differs from pole count");

    // Identify each face with its pole through the branch classification J.
    for (auto& face : faces_) {
        for (size_t e = 0; e < npoles; ++e)
            if (face.support == bs_.J()[e]) face.pole = static_cast<int>(e);
        if (face.pole < 0)
            throw FacePoleMismatch("trace_faces: face support does not match any J set");
    }
}

namespace {

std::vector<long> normalize_multiplicities(std::vector<long> e) {
    if (e.empty()) return e;
    long best_shift = 0;
    long best_cost = std::numeric_limits<long>::max();
    for (long cand : e) {
        long cost = 0;
        for (long v : e) cost += std::llabs(v - cand);
        if (cost < best_cost || (cost == best_cost && std::llabs(cand) < std::llabs(best_shift))) {
            best_cost = cost;
            best_shift = cand;
        }
    }
    for (auto& v : e) v -= best_shift;
    return e;
}

// t-waypoints for the corridor from the basepoint toward a marked value,
// densified near the far end where branches may coalesce.
std::vector<cplx> corridor_waypoints(const cplx& from, const cplx& to, int count = 28) {
    std::vector<cplx> w;
    for (int j = 0; j <= count; ++j) {
        double u = static_cast<double>(j) / count;
        double v = 1.0 - (1.0 - u) * (1.0 - u);
        w.push_back(from + (to - from) * v);
    }
    return w;
}

} // namespace

Deformation deform_to_skeleton(const Curve& gamma, const Constellation& c) {
    const BranchSystem& bs = c.branch_system();
    Deformation d;
    d.closed = gamma.closed();

    for (const auto& p : bs.poles().points)
        if (gamma.min_distance(p) < 1e-8)
            throw PoleOnCurve("deform_to_skeleton: pole of P on the curve");

    if (gamma.closed()) {
        std::vector<long> e;
        for (const auto& face : c.faces()) {
            int pole = face.pole;
            if (pole < static_cast<int>(bs.poles().points.size()))
                e.push_back(winding_number(gamma, bs.pole_point(static_cast<size_t>(pole))));
            else
                e.push_back(0); // pole at infinity: winding 0 by convention
        }
        d.face_multiplicities = normalize_multiplicities(std::move(e));
        return d;
    }

    // Non-closed case: walk between the endpoint vertices, then correct the
    // windings face by face.
    const cplx a = gamma.start(), b = gamma.end();
    const cplx va = bs.P().eval(a), vb = bs.P().eval(b);
    int s_a = c.color_of_value(va), s_b = c.color_of_value(vb);
    if (s_a < 0 || s_b < 0)
        throw std::logic_error("deform_to_skeleton: endpoint values are not marked colors");

    const int n = c.n(), k = c.k();
    // vertex tables: per color, cycles of sigma_s and landing geometry
    std::vector<std::vector<std::vector<int>>> cycles(static_cast<size_t>(k));
    std::vector<LandingData> landing(static_cast<size_t>(k));
    std::vector<char> have_landing(static_cast<size_t>(k), 0);
    for (int s = 0; s < k; ++s) cycles[static_cast<size_t>(s)] = c.sigma()[static_cast<size_t>(s)].cycles();

    auto get_landing = [&](int s) -> LandingData& {
        if (!have_landing[static_cast<size_t>(s)]) {
            landing[static_cast<size_t>(s)] = bs.landings(c.marked_values()[static_cast<size_t>(s)]);
            have_landing[static_cast<size_t>(s)] = 1;
        }
        return landing[static_cast<size_t>(s)];
    };

    auto vertex_of_point = [&](int s, const cplx& pt) {
        const LandingData& ld = get_landing(s);
        size_t best = 0;
        double bd = std::numeric_limits<double>::infinity();
        for (size_t cl = 0; cl < ld.cluster_points.size(); ++cl) {
            double dd = std::abs(ld.cluster_points[cl] - pt);
            if (dd < bd) {
                bd = dd;
                best = cl;
            }
        }
        return static_cast<int>(best);
    };

    // The landing cluster ids coincide with the cycle indexing of sigma_s.
    int vtx_a = vertex_of_point(s_a, a);
    int vtx_b = vertex_of_point(s_b, b);

    // BFS on the incidence graph: vertex nodes (s, cyc) and star nodes i.
    struct VNode {
        int s, cyc;
    };
    auto vkey = [&](int s, int cyc) { return s * (n + 1) + cyc; };
    std::map<int, std::pair<int, int>> pred_star;   // vertex key -> (star, prev vertex key)
    std::set<int> seen{vkey(s_a, vtx_a)};
    std::deque<VNode> queue{{s_a, vtx_a}};
    bool reached = (s_a == s_b && vtx_a == vtx_b);
    while (!queue.empty() && !reached) {
        VNode cur = queue.front();
        queue.pop_front();
        for (int i : cycles[static_cast<size_t>(cur.s)][static_cast<size_t>(cur.cyc)]) {
            for (int s2 = 0; s2 < k && !reached; ++s2) {
                // star i is attached to the sigma_{s2}-cycle containing i
                int cyc2 = -1;
                for (size_t ci = 0; ci < cycles[static_cast<size_t>(s2)].size(); ++ci)
                    for (int x : cycles[static_cast<size_t>(s2)][ci])
                        if (x == i) cyc2 = static_cast<int>(ci);
                int key2 = vkey(s2, cyc2);
                if (seen.insert(key2).second) {
                    pred_star[key2] = {i, vkey(cur.s, cur.cyc)};
                    if (s2 == s_b && cyc2 == vtx_b) reached = true;
                    else queue.push_back({s2, cyc2});
                }
            }
            if (reached) break;
        }
    }
    if (!reached && !(s_a == s_b && vtx_a == vtx_b))
        throw FacePoleMismatch("deform_to_skeleton: skeleton is not connected");

    // reconstruct vertex/star alternating chain a -> ... -> b
    std::vector<std::pair<int, int>> chain_vertices; // (s, cyc) from b back to a
    std::vector<int> chain_stars;
    {
        int key = vkey(s_b, vtx_b);
        chain_vertices.push_back({s_b, vtx_b});
        while (key != vkey(s_a, vtx_a)) {
            auto [star, prev] = pred_star.at(key);
            chain_stars.push_back(star);
            key = prev;
            chain_vertices.push_back({key / (n + 1), key % (n + 1)});
        }
        std::reverse(chain_vertices.begin(), chain_vertices.end());
        std::reverse(chain_stars.begin(), chain_stars.end());
    }
    for (size_t j = 0; j < chain_stars.size(); ++j) {
        d.walk.push_back({chain_vertices[j].first, chain_stars[j], -1});
        d.walk.push_back({chain_vertices[j + 1].first, chain_stars[j], +1});
    }

    // Geometric realization of the walk for winding corrections.
    std::vector<std::vector<std::vector<cplx>>> traces(static_cast<size_t>(k));
    auto get_trace = [&](int s) -> const std::vector<std::vector<cplx>>& {
        if (traces[static_cast<size_t>(s)].empty()) {
            get_landing(s);
            const cplx target = c.marked_values()[static_cast<size_t>(s)];
            // stop short of true branch points; run all the way for ordinary values
            bool is_bp = false;
            for (const auto& bp : bs.branch_points())
                if (std::abs(bp - target) < 1e-9 * (1.0 + std::abs(bp))) is_bp = true;
            cplx stop = target;
            if (is_bp) {
                cplx u = (bs.basepoint() - target) / std::abs(bs.basepoint() - target);
                double dmin = std::abs(bs.basepoint() - target);
                for (const auto& bp : bs.branch_points())
                    if (std::abs(bp - target) > 1e-12) dmin = std::min(dmin, std::abs(bp - target));
                stop = target + 0.02 * dmin * u;
            }
            traces[static_cast<size_t>(s)] =
                track_fiber_trace(bs.P(), corridor_waypoints(bs.basepoint(), stop), bs.branch_values());
        }
        return traces[static_cast<size_t>(s)];
    };

    auto edge_polyline = [&](int s, int star, const cplx& vertex_pt) {
        const auto& tr = get_trace(s);
        std::vector<cplx> pts;
        for (const auto& row : tr) pts.push_back(row[static_cast<size_t>(star)]);
        pts.push_back(vertex_pt);
        return pts;
    };

    std::vector<cplx> walk_pts;
    walk_pts.push_back(a);
    for (size_t j = 0; j < chain_stars.size(); ++j) {
        auto [s_from, cyc_from] = chain_vertices[j];
        auto [s_to, cyc_to] = chain_vertices[j + 1];
        int star = chain_stars[j];
        cplx pt_from = (j == 0) ? a : get_landing(s_from).cluster_points[static_cast<size_t>(cyc_from)];
        cplx pt_to = (j + 1 == chain_stars.size() && s_to == s_b && cyc_to == vtx_b)
                         ? b
                         : get_landing(s_to).cluster_points[static_cast<size_t>(cyc_to)];
        std::vector<cplx> leg_in = edge_polyline(s_from, star, pt_from); // center -> vertex_from
        std::reverse(leg_in.begin(), leg_in.end());                     // vertex_from -> center
        std::vector<cplx> leg_out = edge_polyline(s_to, star, pt_to);   // center -> vertex_to
        walk_pts.insert(walk_pts.end(), leg_in.begin() + 1, leg_in.end());
        walk_pts.insert(walk_pts.end(), leg_out.begin() + 1, leg_out.end());
    }

    // Closed comparison contour: gamma followed by the reversed walk.
    std::vector<cplx> contour = gamma.sample(256);
    for (auto it = walk_pts.rbegin(); it != walk_pts.rend(); ++it) contour.push_back(*it);

    d.corrections.assign(c.faces().size(), 0);
    for (size_t f = 0; f < c.faces().size(); ++f) {
        int pole = c.faces()[f].pole;
        if (pole < static_cast<int>(bs.poles().points.size()))
            d.corrections[f] = winding_number_polyline(contour, bs.pole_point(static_cast<size_t>(pole)));
    }
    d.corrections = normalize_multiplicities(std::move(d.corrections));
    return d;
}

CoefficientSystem coefficient_system(const Constellation& c, const Deformation& d) {
    CoefficientSystem cs;
    cs.k = c.k();
    cs.n = c.n();
    cs.f.assign(static_cast<size_t>(cs.k), std::vector<long>(static_cast<size_t>(cs.n), 0));
    const auto& faces = c.faces();
    if (d.closed) {
        for (size_t fi = 0; fi < faces.size(); ++fi) {
            long e = d.face_multiplicities[fi];
            if (e == 0) continue;
            for (int s = 0; s < cs.k; ++s)
                for (int i = 0; i < cs.n; ++i)
                    cs.f[static_cast<size_t>(s)][static_cast<size_t>(i)] +=
                        e * faces[fi].rows[static_cast<size_t>(s)][static_cast<size_t>(i)];
        }
        return cs;
    }
    for (const auto& step : d.walk)
        cs.f[static_cast<size_t>(step.color)][static_cast<size_t>(step.star)] += step.sign;
    for (size_t fi = 0; fi < faces.size(); ++fi) {
        long e = d.corrections[fi];
        if (e == 0) continue;
        for (int s = 0; s < cs.k; ++s)
            for (int i = 0; i < cs.n; ++i)
                cs.f[static_cast<size_t>(s)][static_cast<size_t>(i)] +=
                    e * faces[fi].rows[static_cast<size_t>(s)][static_cast<size_t>(i)];
    }
    return cs;
}

CoefficientSystem walk_rows(int k, int n, const std::vector<WalkStep>& walk) {
    CoefficientSystem cs;
    cs.k = k;
    cs.n = n;
    cs.f.assign(static_cast<size_t>(k), std::vector<long>(static_cast<size_t>(n), 0));
    for (const auto& step : walk)
        cs.f[static_cast<size_t>(step.color)][static_cast<size_t>(step.star)] += step.sign;
    return cs;
}

} // namespace mk
