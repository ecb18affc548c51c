#include "toricg2/lattice.hpp"

#include "toricg2/errors.hpp"
#include "toricg2/linalg.hpp"

#include <algorithm>

namespace toricg2 {

std::pair<IVec, Int> primitive_part(const IVec& v) {
    const Int g = content(v);
    if (g == 0) throw std::invalid_argument("zero vector has no primitive part");
    IVec p = v;
    for (Int& x : p) x /= g;
    return {p, g};
}

IVec solve_dependency(const std::vector<IVec>& vectors) {
    if (vectors.empty()) throw std::invalid_argument("degenerate wall");
    const size_t d = vectors[0].size();
    if (vectors.size() != d + 1) throw std::invalid_argument("degenerate wall");
    for (const IVec& v : vectors)
        if (v.size() != d) throw std::invalid_argument("degenerate wall");

    // Columns are the vectors; the kernel of this d x (d+1) matrix is the
    // dependency space, which must be exactly 1-dimensional.
    QMat a(d, QVec(d + 1));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j <= d; ++j) a[i][j] = Rat(vectors[j][i]);
    const LinearSolution sol = solve_linear(std::move(a), QVec(d, 0));
    if (sol.kernel.size() != 1) throw std::invalid_argument("degenerate wall");

    IVec c = primitive_scale(sol.kernel[0]);
    for (const Int& x : c) {
        if (x == 0) continue;
        if (x < 0)
            for (Int& y : c) y = -y;
        break;
    }
    return c;
}

std::vector<IVec> lattice_points_in_simplex(const std::vector<IVec>& vertices) {
    if (vertices.empty())
        throw std::invalid_argument("simplex needs at least one vertex");
    const size_t d = vertices[0].size();
    for (const IVec& v : vertices)
        if (v.size() != d)
            throw std::invalid_argument("simplex vertices of mixed dimension");
    const size_t k = vertices.size() - 1;  // simplex dimension
    if (k > d) throw std::invalid_argument("vertices are affinely dependent");

    // Edge matrix E = [v_1-v_0 ... v_k-v_0] (d x k); affine independence
    // means full column rank k.
    QMat e(d, QVec(k));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < k; ++j)
            e[i][j] = Rat(vertices[j + 1][i] - vertices[0][i]);
    GaussSolver solver(e);
    if (solver.rank() != static_cast<int>(k))
        throw std::invalid_argument("vertices are affinely dependent");

    // Bounding box sweep with an exact barycentric membership test:
    // x in simplex  iff  E*l = x - v_0 is consistent, l_i >= 0, sum l_i <= 1.
    IVec lo = vertices[0], hi = vertices[0];
    for (const IVec& v : vertices)
        for (size_t i = 0; i < d; ++i) {
            lo[i] = std::min(lo[i], v[i]);
            hi[i] = std::max(hi[i], v[i]);
        }
    Int box = 1;
    for (size_t i = 0; i < d; ++i) box *= hi[i] - lo[i] + 1;
    if (box > 50'000'000)
        throw std::invalid_argument("simplex bounding box too large to enumerate");

    std::vector<IVec> points;
    IVec x = lo;
    while (true) {
        QVec rhs(d);
        for (size_t i = 0; i < d; ++i) rhs[i] = Rat(x[i] - vertices[0][i]);
        if (auto l = solver.solve(rhs)) {
            Rat total = 0;
            bool inside = true;
            for (const Rat& li : *l) {
                if (li < 0) {
                    inside = false;
                    break;
                }
                total += li;
            }
            if (inside && total <= 1) points.push_back(x);
        }
        // Odometer increment over the box, last coordinate fastest.
        bool advanced = false;
        size_t i = d;
        while (i > 0) {
            --i;
            if (x[i] < hi[i]) {
                ++x[i];
                for (size_t j = i + 1; j < d; ++j) x[j] = lo[j];
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    std::sort(points.begin(), points.end());
    return points;
}

} // namespace toricg2
