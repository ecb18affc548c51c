#pragma once
/**
 * @file linalg.hpp
 * @brief Exact linear algebra over the integers and rationals.
 *
 * Everything here is deterministic: pivots are always chosen leftmost /
 * topmost, so repeated runs produce bit-identical results.  Integer
 * determinants use fraction-free Bareiss elimination; integer kernels use
 * unimodular column reduction (so kernel bases generate the *saturated*
 * kernel lattice); rational solves use plain Gauss-Jordan elimination.
 */

#include "toricg2/numeric.hpp"

#include <optional>

namespace toricg2 {

/// Determinant of a square integer matrix (Bareiss, fraction-free).
Int int_det(IMat a);

/// Determinant of a square rational matrix (Gauss).
Rat rat_det(QMat a);

/// Result of solving A x = b over the rationals.
struct LinearSolution {
    bool consistent = false;
    QVec particular;   ///< one solution (free variables set to 0)
    QMat kernel;       ///< basis of the solution space of A x = 0 (rows)
};

/// Solve A x = b exactly (A: m x n row-major, b: length m).
LinearSolution solve_linear(QMat a, QVec b);

/// Reusable exact solver for many right-hand sides against a fixed matrix.
class GaussSolver {
public:
    /// Row-reduces `a` (m x n) once; later solves are back-substitutions.
    explicit GaussSolver(QMat a);

    int rank() const { return static_cast<int>(pivot_cols_.size()); }

    /// Solve A x = b; std::nullopt when inconsistent.  Free variables are 0.
    std::optional<QVec> solve(const QVec& b) const;

private:
    QMat red_;                   ///< RREF of A
    QMat ops_;                   ///< row operations applied (E with E*A = red_)
    std::vector<int> pivot_cols_;
    int cols_ = 0;
};

/**
 * Basis of the integer kernel lattice { x in Z^n : M x = 0 }.
 *
 * Returned rows form a lattice basis of the full (saturated) kernel, computed
 * by unimodular column operations, so any integer solution is an integer
 * combination of them.
 */
IMat integer_kernel_basis(const IMat& m);

/// gcd of the absolute values of all k x k minors of a k x n integer matrix
/// (k <= n); the index of the sublattice spanned by the rows inside its
/// saturation.  Rows must be linearly independent.
Int gcd_of_maximal_minors(const IMat& rows);

} // namespace toricg2
