#include "mk/laurent_moment.hpp"

#include <algorithm>

namespace mk {

namespace {

long factorial_capped(long n, long cap) {
    long f = 1;
    for (long i = 2; i <= n; ++i) {
        f *= i;
        if (f > cap) return cap;
    }
    return f;
}

std::vector<int> j0_indicator(const BranchSystem& bs) {
    // J_0: branches approaching the pole at 0.
    int zero_pole = -1;
    for (size_t e = 0; e < bs.poles().points.size(); ++e)
        if (std::abs(bs.pole_point(e)) < 1e-9) zero_pole = static_cast<int>(e);
    std::vector<int> f(static_cast<size_t>(bs.n()), 0);
    if (zero_pole >= 0)
        for (int i : bs.J()[static_cast<size_t>(zero_pole)]) f[static_cast<size_t>(i)] = 1;
    return f;
}

} // namespace

BautinCertificate bautin_index(const BranchSystem& bs, long m_deg, size_t cap) {
    BautinCertificate cert;
    cert.m_deg = m_deg;
    long n = bs.n();
    cert.fallback_bound = m_deg * (factorial_capped(n, 1L << 40) - 1) + 1;
    try {
        PermGroup g = bs.group();
        cert.n_of_l = static_cast<long>(g.vector_orbit_size(j0_indicator(bs), cap));
        cert.bound = m_deg * (cert.n_of_l - 1) + 1;
    } catch (const ClosureCapExceeded&) {
        cert.used_fallback = true;
        cert.n_of_l = factorial_capped(n, 1L << 40);
        cert.bound = cert.fallback_bound;
    }
    return cert;
}

BautinCertificate bautin_index(const LaurentPolynomial& L, long m_deg, size_t cap) {
    return bautin_index(monodromy(L.to_rational()), m_deg, cap);
}

DvdkResult dvdk_check(const LaurentPolynomial& L, int hard_cap) {
    DvdkResult res;
    if (L.is_zero()) throw ZeroInput("dvdk_check: zero input");
    res.proper = L.is_proper();
    if (!res.proper) return res;

    BautinCertificate cert = bautin_index(L, 1);
    res.search_bound = cert.bound; // m = 1 for m(z) = 1/z
    LaurentPolynomial one_over_z = LaurentPolynomial::monomial(-1);
    LaurentPowerStream stream(L);
    int limit = static_cast<int>(std::min<long>(hard_cap, std::max<long>(res.search_bound, 8)));
    for (int i = 1; i <= hard_cap; ++i) {
        stream.advance();
        GaussRat c = residue_product(stream.current(), one_over_z); // constant term of L^i
        if (!c.is_zero()) {
            res.witness = i;
            res.constant_term = c;
            res.within_bound = i <= res.search_bound;
            return res;
        }
        if (i >= limit && i >= res.search_bound * 4 && i >= 64) break;
    }
    throw WitnessNotFoundWithinBound(
        "dvdk_check: no witness found; bound misuse or implementation fault");
}

D2Witness d2_witness(const LaurentPolynomial& L, const LaurentPolynomial& m) {
    if (!L.is_proper()) throw CongruenceUnmet("d2_witness: L must be proper");
    auto [n1, n2] = L.bidegree();
    auto [m1, m2] = m.bidegree();
    int index = -1;
    if (m1 >= 0) {
        // polynomial in z: need m1 == -1 mod n1, i.e. l1 = (-1 - m1)/n1 >= 0
        if ((-1 - m1) % n1 != 0) throw CongruenceUnmet("d2_witness: m1 != -1 mod n1");
        long l1 = (-1 - m1) / n1;
        if (l1 < 0) throw CongruenceUnmet("d2_witness: negative witness index");
        index = static_cast<int>(l1);
    } else if (m2 <= 0) {
        if ((-1 - m2) % n2 != 0) throw CongruenceUnmet("d2_witness: m2 != -1 mod n2");
        long l2 = (-1 - m2) / n2;
        if (l2 < 0) throw CongruenceUnmet("d2_witness: negative witness index");
        index = static_cast<int>(l2);
    } else {
        throw CongruenceUnmet("d2_witness: m must be a polynomial in z or in 1/z");
    }
    GaussRat r = circle_residue(L, m, index);
    if (r.is_zero())
        throw CrossCheckMismatch("d2_witness: predicted extremal residue vanished");
    return {index, r};
}

LauResult condition_lau(const LaurentPolynomial& L, const LaurentPolynomial& M, double tol) {
    if (!L.is_proper()) throw CongruenceUnmet("condition_lau: L must be proper");
    LauResult res;
    BranchSystem bs = monodromy(L.to_rational());

    // indices of branches near 0 and near infinity
    std::vector<int> ind = j0_indicator(bs);
    LaurentPolynomial M0 = M.principal_at_zero();
    LaurentPolynomial Minf = M.regular_part_no_constant(); // normalization M_inf(0) = 0

    auto samples = bs.sample_points(20);
    double scale = 1.0;
    for (const auto& t : samples) {
        auto fiber = bs.fiber_at(t);
        cplx lhs(0, 0), rhs(0, 0);
        for (long i = 0; i < bs.n(); ++i) {
            cplx x = fiber[static_cast<size_t>(i)];
            if (ind[static_cast<size_t>(i)]) lhs += Minf.eval(x);
            else rhs += M0.eval(x);
            scale = std::max({scale, std::abs(Minf.eval(x)), std::abs(M0.eval(x))});
        }
        res.samples.push_back(lhs - rhs);
        res.max_residual = std::max(res.max_residual, std::abs(lhs - rhs));
    }
    res.holds = res.max_residual < tol * scale;

    // exact cross-check: moments of L^i dM up to the Bautin bound
    LaurentPolynomial dM = M.derivative();
    long mdeg = M.is_zero() ? 1 : M.map_degree();
    BautinCertificate cert = bautin_index(bs, std::max(1L, mdeg));
    res.moments_checked = cert.bound;
    res.moments_vanish = true;
    LaurentPowerStream stream(L);
    for (long i = 0; i <= cert.bound; ++i) {
        if (!residue_product(stream.current(), dM).is_zero()) {
            res.moments_vanish = false;
            break;
        }
        if (i < cert.bound) stream.advance();
    }
    if (res.holds != res.moments_vanish)
        throw CrossCheckMismatch("condition_lau: sampled identity disagrees with exact moments");
    return res;
}

D3D4Report d3_d4_check(const LaurentPolynomial& L, const LaurentPolynomial& M) {
    D3D4Report rep;
    if (!L.is_proper()) throw CongruenceUnmet("d3_d4_check: L must be proper");
    auto [n1, n2] = L.bidegree();
    rep.n1 = n1;
    rep.n2 = n2;

    auto first_nonzero_moment = [&](long depth) -> std::optional<long> {
        LaurentPolynomial dM = M.derivative();
        LaurentPowerStream stream(L);
        for (long i = 0; i <= depth; ++i) {
            if (!residue_product(stream.current(), dM).is_zero()) return i;
            if (i < depth) stream.advance();
        }
        return std::nullopt;
    };

    long mdeg = M.is_zero() ? 1 : M.map_degree();
    BautinCertificate cert = bautin_index(L, std::max(1L, mdeg));
    auto nz = first_nonzero_moment(cert.bound);

    rep.d3_applies = (n1 == -1 || n2 == 1);
    if (rep.d3_applies) {
        rep.d3_moments_vanish = !nz.has_value();
        if (rep.d3_moments_vanish && !M.is_zero())
            rep.note += "d3 violated: nonzero polynomial with vanishing moments; ";
    }

    // d4: bi-degree (n, p) with prime p and a vanishing polynomial solution M
    auto is_prime = [](long p) {
        if (p < 2) return false;
        for (long d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    };
    bool m_is_polynomial = M.is_zero() || M.bidegree().first >= 0;
    if (is_prime(n2) && m_is_polynomial && !M.is_zero() && !nz.has_value()) {
        rep.d4_applies = true;
        rep.p = n2;
        rep.l_is_power_composite = true;
        for (const auto& [k, v] : L.coeffs())
            if (k % n2 != 0) rep.l_is_power_composite = false;
        BranchSystem bs = monodromy(L.to_rational());
        std::vector<int> jinf;
        std::vector<int> ind = j0_indicator(bs);
        for (long i = 0; i < bs.n(); ++i)
            if (!ind[static_cast<size_t>(i)]) jinf.push_back(static_cast<int>(i));
        rep.j_inf_is_block = bs.group().is_block(jinf);
        rep.m_support_avoids_p = true;
        for (const auto& [k, v] : M.coeffs())
            if (k % n2 == 0) rep.m_support_avoids_p = false;
    }
    return rep;
}

} // namespace mk
