#include <doctest.h>

#include "toricg2/linalg.hpp"

#include <random>

using namespace toricg2;

namespace {

IMat to_imat(std::initializer_list<std::initializer_list<long>> rows) {
    IMat m;
    for (const auto& r : rows) {
        IVec v;
        for (long x : r) v.emplace_back(x);
        m.push_back(std::move(v));
    }
    return m;
}

QMat to_qmat(std::initializer_list<std::initializer_list<long>> rows) {
    QMat m;
    for (const auto& r : rows) {
        QVec v;
        for (long x : r) v.emplace_back(x);
        m.push_back(std::move(v));
    }
    return m;
}

} // namespace

TEST_CASE("integer determinants") {
    CHECK(int_det(to_imat({{2}})) == 2);
    CHECK(int_det(to_imat({{1, 0}, {0, 1}})) == 1);
    CHECK(int_det(to_imat({{0, 1}, {1, 0}})) == -1);
    CHECK(int_det(to_imat({{2, 3}, {4, 5}})) == -2);
    CHECK(int_det(to_imat({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 0);
    // 3x3 with known value 1*(0*8-6*7) - 2*(5*8-6*0) + 3*(5*7-0*0) = -17
    CHECK(int_det(to_imat({{1, 2, 3}, {5, 0, 6}, {0, 7, 8}})) == -17);
}

TEST_CASE("determinant of a large banded matrix stays exact") {
    // Tridiagonal matrix with 2 on the diagonal and -1 off it has
    // determinant n+1 (continuant recurrence).
    const int n = 12;
    IMat m(n, IVec(n, Int(0)));
    for (int i = 0; i < n; ++i) {
        m[i][i] = 2;
        if (i > 0) m[i][i - 1] = -1;
        if (i + 1 < n) m[i][i + 1] = -1;
    }
    CHECK(int_det(m) == n + 1);
}

TEST_CASE("rational determinant") {
    QMat m = to_qmat({{1, 2}, {3, 4}});
    m[0][0] = Rat(1) / Rat(2);
    CHECK(rat_det(m) == Rat(1) / Rat(2) * 4 - Rat(2) * 3);
}

TEST_CASE("solve_linear finds particular and kernel") {
    // x + y = 3 has a one-dimensional solution family.
    const LinearSolution s = solve_linear(to_qmat({{1, 1}}), QVec{Rat(3)});
    REQUIRE(s.consistent);
    CHECK(s.particular[0] + s.particular[1] == 3);
    REQUIRE(s.kernel.size() == 1);
    CHECK(s.kernel[0][0] + s.kernel[0][1] == 0);
    CHECK(!(s.kernel[0][0] == 0 && s.kernel[0][1] == 0));
}

TEST_CASE("solve_linear detects inconsistency") {
    QMat a = to_qmat({{1, 1}, {2, 2}});
    const LinearSolution s = solve_linear(a, QVec{Rat(1), Rat(3)});
    CHECK(!s.consistent);
}

TEST_CASE("solve_linear full-rank square system") {
    const LinearSolution s =
        solve_linear(to_qmat({{2, 1}, {1, 3}}), QVec{Rat(5), Rat(10)});
    REQUIRE(s.consistent);
    CHECK(s.kernel.empty());
    CHECK(s.particular[0] == 1);
    CHECK(s.particular[1] == 3);
}

TEST_CASE("GaussSolver reuses one factorization for many right-hand sides") {
    const QMat a = to_qmat({{1, 2, 0}, {0, 1, 1}});
    const GaussSolver solver(a);
    CHECK(solver.rank() == 2);
    const auto s1 = solver.solve(QVec{Rat(1), Rat(0)});
    REQUIRE(s1.has_value());
    CHECK((*s1)[0] + 2 * (*s1)[1] == 1);
    CHECK((*s1)[1] + (*s1)[2] == 0);
    const auto s2 = solver.solve(QVec{Rat(0), Rat(1)});
    REQUIRE(s2.has_value());
    CHECK((*s2)[0] + 2 * (*s2)[1] == 0);
    CHECK((*s2)[1] + (*s2)[2] == 1);
}

TEST_CASE("GaussSolver reports unsolvable systems") {
    const QMat a = to_qmat({{1, 1}, {1, 1}});
    const GaussSolver solver(a);
    CHECK(solver.rank() == 1);
    CHECK(!solver.solve(QVec{Rat(0), Rat(1)}).has_value());
}

TEST_CASE("integer kernel basis is saturated and annihilates the matrix") {
    // Columns are the rays (0,1),(1,0),(-1,-2) of a weighted plane; the
    // kernel lattice is generated primitively by (2,1,1).
    const IMat m = to_imat({{0, 1, -1}, {1, 0, -2}});
    const IMat k = integer_kernel_basis(m);
    REQUIRE(k.size() == 1);
    const IVec& v = k[0];
    CHECK(v[0] * 0 + v[1] * 1 + v[2] * (-1) == 0);
    CHECK(v[0] * 1 + v[1] * 0 + v[2] * (-2) == 0);
    CHECK(content(v) == 1);
}

TEST_CASE("integer kernel basis saturation on a scaled system") {
    // Kernel of (2 4) in Z^2 is generated by (2,-1), not (4,-2).
    const IMat k = integer_kernel_basis(to_imat({{2, 4}}));
    REQUIRE(k.size() == 1);
    CHECK(abs(k[0][0]) == 2);
    CHECK(abs(k[0][1]) == 1);
    CHECK(2 * k[0][0] + 4 * k[0][1] == 0);
}

TEST_CASE("integer kernel on random integer matrices annihilates exactly") {
    std::mt19937 eng(7u);
    for (int trial = 0; trial < 50; ++trial) {
        const int rows = 2 + static_cast<int>(eng() % 3);
        const int cols = rows + 1 + static_cast<int>(eng() % 2);
        IMat m(rows, IVec(cols));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                m[i][j] = Int(static_cast<long>(eng() % 11) - 5);
        const IMat k = integer_kernel_basis(m);
        for (const IVec& v : k)
            for (int i = 0; i < rows; ++i) {
                Int dot = 0;
                for (int j = 0; j < cols; ++j) dot += m[i][j] * v[j];
                CHECK(dot == 0);
            }
    }
}

TEST_CASE("gcd of maximal minors") {
    CHECK(gcd_of_maximal_minors(to_imat({{1, 0, 0}, {0, 1, 0}})) == 1);
    CHECK(gcd_of_maximal_minors(to_imat({{2, 0}, {0, 2}})) == 4);
    CHECK(gcd_of_maximal_minors(to_imat({{1, 0, 0, 0}, {0, 0, 1, 0},
                                         {-1, -2, -1, 0}})) == 2);
    CHECK(gcd_of_maximal_minors(to_imat({{0, 1}})) == 1);
    CHECK(gcd_of_maximal_minors(to_imat({{0, 3}})) == 3);
    CHECK_THROWS_AS(gcd_of_maximal_minors(to_imat({{1, 1}, {2, 2}})),
                    std::invalid_argument);
}

TEST_CASE("content, primitive scaling and rational lcm helpers") {
    IVec v;
    v.emplace_back(6);
    v.emplace_back(-9);
    CHECK(content(v) == 3);
    QVec q;
    q.emplace_back(Rat(1) / Rat(2));
    q.emplace_back(Rat(3) / Rat(4));
    CHECK(denominator_lcm(q) == 4);
    const IVec scaled = primitive_scale(q);
    CHECK(scaled[0] == 2);
    CHECK(scaled[1] == 3);
    QVec zero(2, Rat(0));
    CHECK_THROWS_WITH_AS(primitive_scale(zero), "zero vector has no primitive part",
                         std::invalid_argument);
}
