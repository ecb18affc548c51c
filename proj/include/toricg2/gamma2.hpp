#pragma once
/**
 * @file gamma2.hpp
 * @brief gamma2 positivity/nefness: the quadrilateral-star formula, exact
 *        intersection numbers gamma2 . V(tau) for small stars, NE_2
 *        generators and surface decomposition at Picard number 2, the
 *        classifier, and full toric-surface (d = 2) arithmetic.
 *
 * gamma2 denotes the 2-cocycle class D_1^2 + ... + D_n^2 built from the
 * torus-invariant prime divisors.  A variety is gamma2-positive (-nef) when
 * gamma2 . S > 0 (>= 0) for every subsurface S; for the supported Picard
 * numbers it suffices to test finitely many torus-invariant surfaces.
 */

#include "toricg2/fan.hpp"
#include "toricg2/walls.hpp"

#include <array>
#include <optional>

namespace toricg2 {

/**
 * A (d-2)-cone tau whose star has exactly 4 rays, with the deterministic
 * labeling: y3 = adjacent ray of smallest index; y1, y2 = the rays sharing a
 * maximal cone with y3 (y1 the smaller); y4 = the remaining ray.  rel3 is
 * the wall relation of tau+y3 (positive on y1, y2), rel1 the wall relation
 * of tau+y1 (positive on y3, y4).
 */
struct QuadSurface {
    std::vector<int> tau;
    int y1 = -1, y2 = -1, y3 = -1, y4 = -1;
    WallRelation rel3;
    WallRelation rel1;
};

/// Throws unsupported_error("unsupported surface (ρ(S)≠2)") when the star of
/// tau does not have exactly 4 rays.
QuadSurface quad_surface(const Fan& fan, const std::vector<int>& tau);

/**
 * The quadrilateral evaluation in raw form, for callers that rescale or
 * relabel: with rel3 data (b1, b2, c3, a over tau) and rel1 data (b3, b4,
 * c1, e over tau, same tau order),
 *
 *   -b3*c1*(b1^2+b2^2+c3^2+sum a_i^2)
 *   + 2*b1*b3*(b1*c1+b3*c3+sum a_i*e_i)
 *   - b1*c3*(b3^2+b4^2+c1^2+sum e_i^2).
 *
 * The value is homogeneous of positive degree in each relation's scale, so
 * its sign is normalization-independent.
 */
Rat gamma2_quad_value(const Rat& b1, const Rat& b2, const Rat& c3, const QVec& a,
                      const Rat& b3, const Rat& b4, const Rat& c1, const QVec& e);

/**
 * The canonical quadrilateral value for tau: gamma2_quad_value on the
 * primitive-integral relations of the deterministic labeling.  Its sign is
 * the sign of gamma2 . V(tau); the magnitude is that intersection number
 * only up to an unspecified positive rational factor.
 */
Rat gamma2_dot_quad(const Fan& fan, const std::vector<int>& tau);

/**
 * The exact intersection number gamma2 . V(tau) for a (d-2)-cone whose star
 * has 3 or 4 rays, from first principles: D_v . V(tau) is expanded into the
 * wall curves C_{tau+u} with exact multiplicity corrections, and D_v . C is
 * read off the wall relations.  Unlike gamma2_dot_quad this value carries no
 * unknown positive factor.
 *
 * Throws unsupported_error for stars with 5 or more rays (d >= 3).
 */
Rat gamma2_dot_star(const Fan& fan, const std::vector<int>& tau);

/**
 * The (at most 3) torus-invariant surface generators of NE_2 at rho = 2.
 * With the sides sorted as in Rho2Structure (x-chain x_1..x_{m-1} plus
 * x_last = x_m; y-chain y_1..y_{n-1} plus y_last = y_n):
 *
 *   S1 = cone(x_1..x_{m-1}, y_3..y_{n-1})   (absent iff n = 2)
 *   S2 = cone(x_2..x_{m-1}, y_2..y_{n-1})
 *   S3 = cone(x_3..x_{m-1}, y_1..y_{n-1})   (absent iff m = 2)
 */
struct Ne2Generators {
    Rho2Structure chains;
    std::optional<std::vector<int>> s1;
    std::vector<int> s2;
    std::optional<std::vector<int>> s3;
};

Ne2Generators ne2_generators(const Fan& fan);

/**
 * Decompose the formal divisor-product class of V(tau) as a nonnegative
 * rational combination  lambda1*[S1] + lambda2*[S2] + lambda3*[S3]  by
 * repeatedly substituting the two extremal relations (low-ratio x's are
 * eliminated toward x_last, low-ratio y's toward y_last, and those two are
 * cleared against the opposite chain); monomials whose support is not a
 * cone of the fan are zero and are dropped.  Coefficients of absent
 * generators are 0.
 */
struct SurfaceDecomposition {
    Rat lambda1, lambda2, lambda3;
};

SurfaceDecomposition decompose_surface_rho2(const Fan& fan,
                                            const std::vector<int>& tau);

/// One evaluated surface inside a classification report.
struct Gamma2Entry {
    std::string role;        ///< "S1", "S2", "S3", or "V(tau)"
    std::vector<int> tau;    ///< the surface's (d-2)-cone
    Rat value;               ///< exact value (see method for its meaning)
    int sign = 0;
    std::string method;      ///< "quad formula" or "star intersection"
};

struct Gamma2Report {
    /// "positive", "nef-not-positive", "neither", or "unsupported".
    std::string verdict;
    std::string detail;               ///< human-oriented one-liner
    std::vector<Gamma2Entry> entries;
    /// Violated cited expectations (S1/S3 positivity).  Non-empty output
    /// maps to exit code 3 in the CLI.
    std::vector<std::string> violations;
};

/// Classifier for rho = 2, d >= 3: evaluates the NE_2 generators (S2 via the
/// quadrilateral formula, S1/S3 via exact star intersection; on S2 both
/// routes must agree in sign).  Throws unsupported_error when rho != 2.
Gamma2Report classify_gamma2_rho2(const Fan& fan);

/// Dispatcher: d = 2 -> gamma2_surface; rho = 1, d >= 3 -> exact evaluation
/// of every (d-2)-cone (their common sign decides); rho = 2 ->
/// classify_gamma2_rho2; otherwise verdict "unsupported".
Gamma2Report classify_gamma2(const Fan& fan);

// ---------------------------------------------------------------- d = 2 ---

/// Self-intersection numbers D_v^2 of a complete toric surface, indexed by
/// ray: for cyclic neighbors u, w of v and any rational m with <m, v> = 1,
/// D_v^2 = -<m,u>/mult(v,u) - <m,w>/mult(v,w) (independent of the m chosen).
/// Throws unsupported_error unless dim == 2.
QVec surface_self_intersections(const Fan& fan);

/// gamma2 of a toric surface: the sum of all D_v^2.
Rat gamma2_surface(const Fan& fan);

/// Result of contracting one ray of a surface fan.
struct RayContraction {
    Fan fan;          ///< the contracted fan (ray removed, cones merged)
    Int a, b, q;      ///< a*x1 + b*x2 = q*y, coprime, all positive
    int removed_ray;  ///< index of y in the *original* fan
};

/// Remove ray y, merging its two cones.  Throws
/// std::invalid_argument("not contractible") when y's neighbors do not span
/// a strictly convex cone containing y in its interior.
RayContraction contract_ray(const Fan& fan, int ray);

/// (a^2+b^2+q^2)/(abq) for the contraction at `ray`; asserts exact equality
/// with gamma2_surface(contracted) - gamma2_surface(original).
Rat gamma2_drop(const Fan& fan, int ray);

/// Subdivide every cone of a Gorenstein surface fan at all lattice points on
/// the height-1 segment between its generators; the result is smooth and the
/// resolution is crepant.  Throws std::invalid_argument on non-Gorenstein
/// input.
Fan crepant_resolution_surface(const Fan& fan);

/// Half the gamma2 drop of a crepant contraction with weights (a, b):
/// 1/a + 1/b - 1/(a+b).  Strictly decreasing in each argument; maximum 3/2
/// at (1,1).
Rat crepant_half_drop(const Int& a, const Int& b);

} // namespace toricg2
