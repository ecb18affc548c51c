#pragma once
/**
 * @file fan.hpp
 * @brief Simplicial complete fans in N = Z^d: data model, validation, walls,
 *        cone multiplicities, stars, and the canonical JSON file format.
 *
 * A fan is stored as primitive ray generators plus maximal cones given by
 * 0-based ray indices.  All maximal cones are required to be simplicial and
 * full-dimensional, and the fan complete; `validate_fan` checks this exactly
 * (no floating point) and everything downstream assumes a validated fan.
 */

#include "toricg2/numeric.hpp"

#include <optional>
#include <string>

namespace toricg2 {

struct Fan {
    int dim = 0;                             ///< ambient rank d of N = Z^d
    std::vector<IVec> rays;                  ///< primitive generators
    std::vector<std::vector<int>> max_cones; ///< d-element, sorted ray indices

    int ray_count() const { return static_cast<int>(rays.size()); }
    /// Picard number of the associated variety: #rays - dim.
    int rho() const { return ray_count() - dim; }
};

struct ValidationReport {
    bool ok = false;
    bool deep = false;                 ///< pairwise intersection check ran
    std::vector<std::string> errors;   ///< empty iff ok
};

/**
 * Validate primitivity/distinctness of rays, simpliciality and full
 * dimension of maximal cones, the wall condition (every facet of a maximal
 * cone is shared by exactly two of them), and completeness (exact membership
 * tests on deterministically sampled directions).
 *
 * `deep` additionally certifies that every pair of maximal cones meets in a
 * common face, via exact rational separation (Fourier-Motzkin).  When
 * unspecified it defaults to on for dim <= 5.
 */
ValidationReport validate_fan(const Fan& fan, std::optional<bool> deep = std::nullopt);

/// Convenience: validate and throw invalid_fan_error on the first failure.
void require_valid(const Fan& fan, std::optional<bool> deep = std::nullopt);

/// A wall: a (d-1)-cone tau shared by exactly two maximal cones.
struct Wall {
    std::vector<int> tau;  ///< sorted ray indices, size d-1
    int cone1 = -1;        ///< index into fan.max_cones, cone1 < cone2
    int cone2 = -1;
    int opp1 = -1;         ///< the ray of cone1 not in tau
    int opp2 = -1;         ///< the ray of cone2 not in tau
};

/// All walls, sorted lexicographically by tau.  Requires the wall condition.
std::vector<Wall> fan_walls(const Fan& fan);

/**
 * Multiplicity of the simplicial cone spanned by the given rays: the index
 * of the sublattice they generate inside its saturation, i.e. the gcd of all
 * maximal minors of the ray matrix.  The zero cone has multiplicity 1; a
 * cone is smooth iff its multiplicity is 1.
 */
Int cone_multiplicity(const Fan& fan, const std::vector<int>& cone_rays);

/**
 * The star of a (d-2)-cone tau, as the complete surface fan it defines.
 *
 * `quotient` is a 2 x d integer matrix whose rows span the functionals
 * vanishing on tau; it induces the projection N -> Z^2 modulo tau.  `rays`
 * lists the fan rays adjacent to tau (i.e. forming a cone with it) in cyclic
 * order starting from the smallest ray index, oriented so consecutive image
 * determinants are positive; `images` are their (not necessarily primitive)
 * projections, in the same order.
 */
struct StarSurface {
    std::vector<int> tau;
    IMat quotient;           ///< 2 x d projection matrix
    std::vector<int> rays;   ///< adjacent ray indices, cyclic order
    IMat images;             ///< 2D images of those rays, same order
};

StarSurface star_surface(const Fan& fan, const std::vector<int>& tau);

/// Parse the "fan/1" JSON file format.  Throws parse_error on malformed
/// input (fan-level validity is validate_fan's job, not the parser's).
Fan fan_from_json(const std::string& text);

/// Canonical serialization: sorted cone lists, fixed key order, 2-space
/// indent, trailing newline.  parse(emit(f)) == f and emit is idempotent,
/// so round-trips are bit-exact.
std::string fan_to_json(const Fan& fan);

} // namespace toricg2
