#pragma once
/**
 * @file walls.hpp
 * @brief Wall relations, the Fano criterion, and the two-extremal-ray
 *        structure of fans with Picard number 2.
 *
 * Every wall tau of a complete simplicial fan carries a unique primitive
 * integral relation among the d+1 rays of its two adjacent maximal cones,
 * normalized so the coefficients of the two opposite rays are positive.
 * These relations are the curve classes generating the Mori cone.
 */

#include "toricg2/fan.hpp"

namespace toricg2 {

/// The primitive relation attached to a wall, as a dense coefficient vector.
struct WallRelation {
    Wall wall;
    IVec coeffs;  ///< length = #rays; zero outside wall.tau and the opposites

    const Int& coeff(int ray) const { return coeffs[ray]; }
    /// Sum of all coefficients: the anticanonical degree of the wall curve.
    Int coeff_sum() const {
        Int s = 0;
        for (const Int& c : coeffs) s += c;
        return s;
    }
};

/// The relation of one wall.  Coefficients of wall.opp1/opp2 come out > 0.
WallRelation wall_relation(const Fan& fan, const Wall& wall);

/// Relations of all walls, in fan_walls order.
std::vector<WallRelation> all_wall_relations(const Fan& fan);

/// Fano test with a witness: per-wall coefficient sums (= -K degree of each
/// wall curve up to positive scale) and the minimizing wall.
struct FanoReport {
    bool fano = false;          ///< every sum strictly positive
    std::vector<Int> sums;      ///< per wall, in fan_walls order
    Int min_sum = 0;
    std::vector<int> min_wall_tau;  ///< tau of a wall attaining min_sum
};

FanoReport fano_report(const Fan& fan);

/// Fano (anticanonical ample) iff every wall relation has positive sum.
bool is_fano(const Fan& fan);

/**
 * The extremal structure of a Picard-number-2 fan.
 *
 * The rays split into two sides X and Y; the two extremal classes of the
 * Mori cone are represented by wall relations rel_x and rel_y with
 *   rel_x:  sum_{x in X} a_x x  =  sum_{y in Y} c_y y   (a_x > 0, c_y >= 0)
 *   rel_y:  sum_{y in Y} b_y y  =  sum_{x in X} d_x x   (b_y > 0, d_x >= 0),
 * and the maximal cones are exactly cone(all rays minus one x minus one y).
 *
 * Sides are deterministic: X is the side containing ray 0.  `x_last` / the
 * x-chain sort X by the ratio d_x / a_x (ascending, ties by ray index), with
 * x_last the distinguished ray opposite the representative wall of rel_y;
 * symmetrically for Y with ratio c_y / b_y and rel_x.
 */
struct Rho2Structure {
    WallRelation rel_x;         ///< extremal relation positive exactly on X
    WallRelation rel_y;         ///< extremal relation positive exactly on Y
    std::vector<int> x_side;    ///< all of X, sorted by ray index
    std::vector<int> y_side;    ///< all of Y, sorted by ray index
    std::vector<int> x_chain;   ///< X minus x_last, sorted by ratio
    std::vector<int> y_chain;   ///< Y minus y_last, sorted by ratio
    int x_last = -1;
    int y_last = -1;

    /// rel_x coefficient of an x-side ray (positive).
    Int a(int ray) const { return rel_x.coeffs[ray]; }
    /// -rel_y coefficient of an x-side ray (nonnegative).
    Int d(int ray) const { return -rel_y.coeffs[ray]; }
    /// rel_y coefficient of a y-side ray (positive).
    Int b(int ray) const { return rel_y.coeffs[ray]; }
    /// -rel_x coefficient of a y-side ray (nonnegative).
    Int c(int ray) const { return -rel_x.coeffs[ray]; }
};

/**
 * Compute the structure above.  Throws unsupported_error when rho != 2 and
 * invalid_fan_error when the expected geometry fails to materialize (the
 * code never guesses: every structural claim is checked).
 */
Rho2Structure extremal_walls_rho2(const Fan& fan);

/**
 * Render a wall relation as an equation between its positive and negative
 * parts, e.g. "2*x1 + 3*x2 + 2*x5 = x4 + x6" with 1-based ray names; an
 * empty side renders as "0".  The rendering is canonical: terms appear in
 * ray order and unit coefficients are omitted.
 */
std::string relation_string(const Fan& fan, const WallRelation& rel);

} // namespace toricg2
