#include "parehr/linalg.hpp"

#include <cassert>

namespace parehr {

namespace {

// Row echelon with partial structural pivoting (first nonzero).  Returns the
// pivot column of each pivot row.  Pivoting is confined to the first
// `pivot_cols` columns so augmented right-hand sides can never be chosen as
// pivots; elimination still spans the whole width.
std::vector<int> echelon(QMat& m, int pivot_cols = -1) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    if (pivot_cols < 0) pivot_cols = cols;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < pivot_cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (!m[i][c].is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(m[r], m[p]);
        const Rational inv = m[r][c].reciprocal();
        for (int j = c; j < cols; ++j) m[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            const Rational f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

Rational mat_det(QMat m) {
    const int n = static_cast<int>(m.size());
    Rational det(1);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (!m[i][c].is_zero()) {
                p = i;
                break;
            }
        if (p < 0) return Rational(0);
        if (p != c) {
            std::swap(m[c], m[p]);
            det = -det;
        }
        det *= m[c][c];
        const Rational inv = m[c][c].reciprocal();
        for (int i = c + 1; i < n; ++i) {
            if (m[i][c].is_zero()) continue;
            const Rational f = m[i][c] * inv;
            for (int j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

std::optional<QMat> mat_inverse(QMat m) {
    const int n = static_cast<int>(m.size());
    for (int i = 0; i < n; ++i) {
        assert(static_cast<int>(m[i].size()) == n);
        for (int j = 0; j < n; ++j) m[i].push_back(Rational(i == j ? 1 : 0));
    }
    auto pivots = echelon(m, n);
    if (static_cast<int>(pivots.size()) < n) return std::nullopt;
    QMat inv(n, QVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
    return inv;
}

std::optional<QVec> mat_solve(QMat a, QVec rhs) {
    const int n = static_cast<int>(a.size());
    for (int i = 0; i < n; ++i) a[i].push_back(rhs[i]);
    auto pivots = echelon(a, n);
    if (static_cast<int>(pivots.size()) < n) return std::nullopt;
    QVec x(n);
    for (int i = 0; i < n; ++i) x[i] = a[i][n];
    return x;
}

QVec mat_apply(const QMat& m, const QVec& v) {
    QVec out(m.size(), Rational(0));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    return out;
}

int mat_rank(QMat m) {
    return static_cast<int>(echelon(m).size());
}

std::vector<QVec> mat_kernel(QMat m) {
    const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
    auto pivots = echelon(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<QVec> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        QVec v(cols, Rational(0));
        v[free] = Rational(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace parehr
