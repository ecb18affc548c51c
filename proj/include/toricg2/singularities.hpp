#pragma once
/**
 * @file singularities.hpp
 * @brief Terminality, Gorenstein index, and the singular locus of a fan.
 *
 * Terminality of a simplicial cone is decided by brute-force enumeration of
 * lattice points in the convex hull of its generators and the origin; the
 * Gorenstein index comes from the exact dual vector of each maximal cone;
 * the singular locus is reported as the inclusion-minimal cones of
 * multiplicity > 1.
 */

#include "toricg2/fan.hpp"

namespace toricg2 {

/**
 * True iff conv(0, generators) contains no lattice points other than the
 * origin and the generators themselves.  Generators must be primitive and
 * linearly independent (a simplicial cone).
 */
bool is_terminal_cone(const std::vector<IVec>& generators);

/**
 * A parametrized family of simplicial terminal cones in Z^d used as test
 * material: generated by e_1, ..., e_{d-1} and
 *     x_d = c * e_d - (e_p + e_{p+1} + ... + e_{d-1}).
 * Requires d >= 3, 1 <= p <= d-1 and 0 < c < d-p+1 (validated; the cone is
 * terminal in that range).  Returns the generator list.
 */
std::vector<IVec> skew_terminal_cone(int d, int p, const Int& c);

/// Per-fan singularity report.
struct GorensteinReport {
    bool terminal = false;           ///< every maximal cone terminal
    bool gorenstein = false;         ///< index == 1
    Int index = 0;                   ///< lcm of dual-vector denominators
    std::vector<Int> max_cone_mult;  ///< |det| per maximal cone
    std::vector<Int> max_cone_index; ///< Gorenstein index per maximal cone
    std::vector<bool> max_cone_terminal;
    /// Inclusion-minimal cones of multiplicity > 1, sorted; empty iff smooth.
    std::vector<std::vector<int>> minimal_singular_cones;
};

/**
 * Compute the report.  The Gorenstein index of a maximal cone sigma is the
 * lcm of the denominators of the unique rational vector m_sigma with
 * <m_sigma, v> = 1 on all rays of sigma; the fan's index is the lcm over
 * all maximal cones.
 */
GorensteinReport gorenstein_report(const Fan& fan);

} // namespace toricg2
