#include "toricg2/linalg.hpp"

#include "toricg2/errors.hpp"

#include <algorithm>

namespace toricg2 {

Int content(const IVec& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    return abs(g);
}

Int lcm_int(const Int& a, const Int& b) { return lcm(a, b); }

Int denominator_lcm(const QVec& v) {
    Int l = 1;
    for (const Rat& x : v) {
        Rat c = x;
        c.canonicalize();
        l = lcm(l, c.get_den());
    }
    return l;
}

IVec primitive_scale(const QVec& v) {
    const Int l = denominator_lcm(v);
    IVec w;
    w.reserve(v.size());
    for (const Rat& x : v) {
        Rat s = x * l;
        s.canonicalize();
        w.push_back(s.get_num());
    }
    const Int g = content(w);
    if (g == 0) throw std::invalid_argument("zero vector has no primitive part");
    for (Int& x : w) x /= g;
    return w;
}

Int int_det(IMat a) {
    const size_t n = a.size();
    for (const IVec& row : a)
        require_internal(row.size() == n, "int_det: matrix not square");
    if (n == 0) return 1;
    // Fraction-free Bareiss elimination; all divisions are exact.
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

Rat rat_det(QMat a) {
    const size_t n = a.size();
    for (const QVec& row : a)
        require_internal(row.size() == n, "rat_det: matrix not square");
    Rat det = 1;
    for (size_t k = 0; k < n; ++k) {
        size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(a[k], a[p]);
            det = -det;
        }
        det *= a[k][k];
        const Rat inv = 1 / a[k][k];
        for (size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            const Rat f = a[i][k] * inv;
            for (size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return det;
}

namespace {

/// Deterministic RREF of [A | b-columns]; returns pivot columns of the A part.
/// `a` is m x n; `rhs` (may be empty) is reduced alongside.
std::vector<int> rref_in_place(QMat& a, QMat& rhs) {
    const size_t m = a.size();
    const int n = m == 0 ? 0 : static_cast<int>(a[0].size());
    std::vector<int> pivots;
    size_t row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        size_t p = row;
        while (p < m && a[p][col] == 0) ++p;
        if (p == m) continue;
        std::swap(a[row], a[p]);
        if (!rhs.empty()) std::swap(rhs[row], rhs[p]);
        const Rat inv = 1 / a[row][col];
        for (int j = 0; j < n; ++j) a[row][j] *= inv;
        if (!rhs.empty())
            for (Rat& x : rhs[row]) x *= inv;
        for (size_t i = 0; i < m; ++i) {
            if (i == row || a[i][col] == 0) continue;
            const Rat f = a[i][col];
            for (int j = 0; j < n; ++j) a[i][j] -= f * a[row][j];
            if (!rhs.empty())
                for (size_t k = 0; k < rhs[i].size(); ++k)
                    rhs[i][k] -= f * rhs[row][k];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

LinearSolution solve_linear(QMat a, QVec b) {
    const size_t m = a.size();
    require_internal(b.size() == m, "solve_linear: size mismatch");
    const int n = m == 0 ? 0 : static_cast<int>(a[0].size());

    QMat rhs(m, QVec(1));
    for (size_t i = 0; i < m; ++i) rhs[i][0] = b[i];
    const std::vector<int> pivots = rref_in_place(a, rhs);

    LinearSolution out;
    out.consistent = true;
    for (size_t i = pivots.size(); i < m; ++i)
        if (rhs[i][0] != 0) out.consistent = false;

    if (out.consistent) {
        out.particular.assign(n, 0);
        for (size_t i = 0; i < pivots.size(); ++i)
            out.particular[pivots[i]] = rhs[i][0];
    }

    std::vector<bool> is_pivot(n, false);
    for (int p : pivots) is_pivot[p] = true;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        QVec v(n, 0);
        v[f] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][f];
        out.kernel.push_back(std::move(v));
    }
    return out;
}

GaussSolver::GaussSolver(QMat a) : red_(std::move(a)) {
    const size_t m = red_.size();
    cols_ = m == 0 ? 0 : static_cast<int>(red_[0].size());
    for (const QVec& row : red_)
        require_internal(static_cast<int>(row.size()) == cols_,
                         "GaussSolver: ragged matrix");
    ops_.assign(m, QVec(m, 0));
    for (size_t i = 0; i < m; ++i) ops_[i][i] = 1;
    pivot_cols_ = rref_in_place(red_, ops_);
}

std::optional<QVec> GaussSolver::solve(const QVec& b) const {
    const size_t m = red_.size();
    require_internal(b.size() == m, "GaussSolver::solve: size mismatch");
    QVec rhs(m, 0);
    for (size_t i = 0; i < m; ++i)
        for (size_t k = 0; k < m; ++k)
            if (ops_[i][k] != 0 && b[k] != 0) rhs[i] += ops_[i][k] * b[k];
    // Rows beyond the rank are zero rows of the reduced matrix: their
    // transformed right-hand side must vanish for consistency.
    for (size_t i = pivot_cols_.size(); i < m; ++i)
        if (rhs[i] != 0) return std::nullopt;
    QVec x(cols_, 0);
    for (size_t i = 0; i < pivot_cols_.size(); ++i) x[pivot_cols_[i]] = rhs[i];
    return x;
}

IMat integer_kernel_basis(const IMat& m) {
    const size_t rows = m.size();
    const size_t n = rows == 0 ? 0 : m[0].size();
    for (const IVec& r : m)
        require_internal(r.size() == n, "integer_kernel_basis: ragged matrix");

    // Column reduction A <- A*U with U unimodular until each processed row
    // has a single nonzero among the unfixed columns.  The columns of U whose
    // image columns vanish form a basis of the saturated kernel lattice.
    IMat a = m;
    IMat u(n, IVec(n, 0));  // u[j] = j-th column of U
    for (size_t j = 0; j < n; ++j) u[j][j] = 1;

    auto col_sub = [&](size_t dst, size_t src, const Int& q) {
        for (size_t i = 0; i < rows; ++i) a[i][dst] -= q * a[i][src];
        for (size_t i = 0; i < n; ++i) u[dst][i] -= q * u[src][i];
    };
    auto col_swap = [&](size_t j1, size_t j2) {
        for (size_t i = 0; i < rows; ++i) std::swap(a[i][j1], a[i][j2]);
        std::swap(u[j1], u[j2]);
    };

    size_t lead = 0;
    for (size_t i = 0; i < rows && lead < n; ++i) {
        while (true) {
            // Smallest-magnitude nonzero entry is the Euclid pivot.
            size_t best = n;
            for (size_t j = lead; j < n; ++j) {
                if (a[i][j] == 0) continue;
                if (best == n || abs(a[i][j]) < abs(a[i][best])) best = j;
            }
            if (best == n) break;  // row already zero on unfixed columns
            bool others = false;
            for (size_t j = lead; j < n; ++j) {
                if (j == best || a[i][j] == 0) continue;
                const Int q = a[i][j] / a[i][best];  // truncated division
                if (q != 0) col_sub(j, best, q);
                if (a[i][j] != 0) others = true;
            }
            if (!others) {
                if (best != lead) col_swap(lead, best);
                ++lead;
                break;
            }
        }
    }

    IMat basis(u.begin() + lead, u.end());
    // Deterministic sign normalization: first nonzero entry positive.
    for (IVec& v : basis) {
        for (const Int& x : v) {
            if (x == 0) continue;
            if (x < 0)
                for (Int& y : v) y = -y;
            break;
        }
    }
    return basis;
}

Int gcd_of_maximal_minors(const IMat& rows) {
    const size_t k = rows.size();
    if (k == 0) return 1;
    const size_t n = rows[0].size();
    for (const IVec& r : rows)
        require_internal(r.size() == n, "gcd_of_maximal_minors: ragged matrix");
    require_internal(k <= n, "gcd_of_maximal_minors: more rows than columns");

    Int g = 0;
    std::vector<size_t> idx(k);
    for (size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        IMat sub(k, IVec(k));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) sub[i][j] = rows[i][idx[j]];
        g = gcd(g, int_det(std::move(sub)));
        if (g == 1) break;  // cannot shrink further

        // Advance to the next k-combination of {0..n-1}, if any.
        size_t i = k;
        bool advanced = false;
        while (i > 0) {
            --i;
            if (idx[i] != i + n - k) {
                ++idx[i];
                for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    if (g == 0)
        throw std::invalid_argument(
            "gcd_of_maximal_minors: rows are linearly dependent");
    return abs(g);
}

} // namespace toricg2
