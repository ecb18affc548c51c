#pragma once
/**
 * @file lattice.hpp
 * @brief Elementary lattice operations in N = Z^d.
 *
 * These are the building blocks for fan geometry: primitive vectors, the
 * (unique up to sign) integral linear dependency among d+1 spanning vectors,
 * and exact enumeration of lattice points in a simplex.
 */

#include "toricg2/numeric.hpp"

#include <utility>

namespace toricg2 {

/**
 * The primitive vector on the ray through `v`, together with the positive
 * stretch factor: v = factor * primitive.
 * Throws std::invalid_argument("zero vector has no primitive part") on 0.
 */
std::pair<IVec, Int> primitive_part(const IVec& v);

/**
 * The primitive integral linear dependency among d+1 vectors spanning Q^d:
 * coefficients c with  sum_i c_i * v_i = 0,  gcd(|c_i|) = 1, and the first
 * nonzero coefficient positive.
 *
 * Throws std::invalid_argument("degenerate wall") when the vectors do not
 * span (equivalently, when the dependency space is not 1-dimensional).
 */
IVec solve_dependency(const std::vector<IVec>& vectors);

/**
 * All lattice points of conv(vertices), endpoints included, for affinely
 * independent vertex sets (a k-simplex in Z^d, k <= d).  Points are returned
 * sorted lexicographically.
 *
 * Throws std::invalid_argument if the vertices are affinely dependent or the
 * bounding box is too large to enumerate.
 */
std::vector<IVec> lattice_points_in_simplex(const std::vector<IVec>& vertices);

} // namespace toricg2
