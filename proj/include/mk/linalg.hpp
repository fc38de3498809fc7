#ifndef MK_LINALG_HPP
#define MK_LINALG_HPP

#include <vector>

namespace mk {

/// In-place reduced row echelon form over an exact field; returns the rank.
/// F needs default construction (zero), ==, +, -, *, /.
template <class F>
int rref(std::vector<std::vector<F>>& m) {
    if (m.empty()) return 0;
    const size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] == F()) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        F inv = m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] = m[r][j] / inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == F()) continue;
            F f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        ++r;
    }
    m.resize(r, std::vector<F>());
    return static_cast<int>(r);
}

/// Basis of the right nullspace of m (vectors of length cols).
template <class F>
std::vector<std::vector<F>> nullspace(std::vector<std::vector<F>> m, size_t cols) {
    for (auto& row : m) row.resize(cols, F());
    int rank = rref(m);
    std::vector<int> pivot_col(static_cast<size_t>(rank), -1);
    std::vector<char> is_pivot(cols, 0);
    for (int i = 0; i < rank; ++i)
        for (size_t c = 0; c < cols; ++c)
            if (!(m[static_cast<size_t>(i)][c] == F())) {
                pivot_col[static_cast<size_t>(i)] = static_cast<int>(c);
                is_pivot[c] = 1;
                break;
            }
    std::vector<std::vector<F>> basis;
    for (size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<F> v(cols, F());
        v[free_c] = F(1);
        for (int i = 0; i < rank; ++i) {
            int pc = pivot_col[static_cast<size_t>(i)];
            if (pc >= 0) v[static_cast<size_t>(pc)] = F() - m[static_cast<size_t>(i)][free_c];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Solve A x = b over an exact field; empty result when inconsistent.
template <class F>
std::vector<F> solve_linear(std::vector<std::vector<F>> a, const std::vector<F>& b) {
    const size_t rows = a.size();
    const size_t cols = rows == 0 ? 0 : a[0].size();
    for (size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    std::vector<std::vector<F>>& aug = a;
    int rank = rref(aug);
    std::vector<F> x(cols, F());
    for (int i = 0; i < rank; ++i) {
        size_t pc = cols + 1;
        for (size_t c = 0; c <= cols; ++c)
            if (!(aug[static_cast<size_t>(i)][c] == F())) {
                pc = c;
                break;
            }
        if (pc == cols) return {}; // 0 = 1 row: inconsistent
        if (pc < cols) x[pc] = aug[static_cast<size_t>(i)][cols];
    }
    return x;
}

} // namespace mk

#endif
