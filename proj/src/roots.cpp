#include "mk/roots.hpp"

#include <Eigen/Eigenvalues>

namespace mk {

cplx poly_eval(const std::vector<cplx>& coeffs, const cplx& z) {
    cplx acc(0, 0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

std::vector<cplx> poly_derivative(const std::vector<cplx>& coeffs) {
    if (coeffs.size() <= 1) return {};
    std::vector<cplx> d(coeffs.size() - 1);
    for (size_t i = 1; i < coeffs.size(); ++i) d[i - 1] = static_cast<double>(i) * coeffs[i];
    return d;
}

std::vector<cplx> poly_roots(const std::vector<cplx>& coeffs_in) {
    std::vector<cplx> c = coeffs_in;
    const double scale = [&] {
        double m = 0;
        for (const auto& x : c) m = std::max(m, std::abs(x));
        return m;
    }();
    if (scale == 0.0) return {};
    while (!c.empty() && std::abs(c.back()) < 1e-14 * scale) c.pop_back();
    std::vector<cplx> roots;
    size_t zero_roots = 0;
    while (zero_roots < c.size() && std::abs(c[zero_roots]) == 0.0) ++zero_roots;
    for (size_t i = 0; i < zero_roots; ++i) roots.push_back(cplx(0, 0));
    c.erase(c.begin(), c.begin() + static_cast<long>(zero_roots));
    if (c.size() <= 1) return roots;

    const size_t n = c.size() - 1;
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(static_cast<long>(n), static_cast<long>(n));
    for (size_t i = 0; i + 1 < n; ++i) comp(static_cast<long>(i + 1), static_cast<long>(i)) = 1.0;
    for (size_t i = 0; i < n; ++i)
        comp(static_cast<long>(i), static_cast<long>(n - 1)) = -c[i] / c[n];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, false);
    std::vector<cplx> d = poly_derivative(c);
    for (long i = 0; i < static_cast<long>(n); ++i) {
        cplx r = solver.eigenvalues()(i);
        for (int it = 0; it < 4; ++it) {
            cplx dv = poly_eval(d, r);
            if (std::abs(dv) < 1e-300) break;
            cplx step = poly_eval(c, r) / dv;
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
            r -= step;
            if (std::abs(step) < 1e-15 * (1.0 + std::abs(r))) break;
        }
        roots.push_back(r);
    }
    return roots;
}

std::vector<cplx> poly_roots(const Poly& p) { return poly_roots(p.to_complex()); }

std::vector<Cluster> cluster_points(const std::vector<cplx>& pts, double tol) {
    std::vector<Cluster> out;
    for (const auto& p : pts) {
        bool merged = false;
        for (auto& cl : out) {
            if (std::abs(p - cl.point) <= tol) {
                cl.point = (cl.point * static_cast<double>(cl.multiplicity) + p) /
                           static_cast<double>(cl.multiplicity + 1);
                ++cl.multiplicity;
                merged = true;
                break;
            }
        }
        if (!merged) out.push_back({p, 1});
    }
    return out;
}

} // namespace mk
