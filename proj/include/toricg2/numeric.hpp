#pragma once
/**
 * @file numeric.hpp
 * @brief Exact arithmetic primitives shared by the whole library.
 *
 * All lattice and cone computations are carried out over arbitrary-precision
 * integers (GMP mpz) and rationals (GMP mpq).  No floating point is used
 * anywhere: every comparison, determinant and solve is exact.
 */

#include <gmpxx.h>

#include <string>
#include <vector>

namespace toricg2 {

using Int = mpz_class;
using Rat = mpq_class;

using IVec = std::vector<Int>;  ///< integer vector (lattice point / functional)
using QVec = std::vector<Rat>;  ///< rational vector
using IMat = std::vector<IVec>; ///< row-major integer matrix
using QMat = std::vector<QVec>; ///< row-major rational matrix

inline int sign_of(const Int& x) { return sgn(x); }
inline int sign_of(const Rat& x) { return sgn(x); }

/// Canonical decimal rendering; rationals print as "p/q", integers as "n".
inline std::string to_string(const Int& x) { return x.get_str(); }
inline std::string to_string(const Rat& x) {
    Rat c = x;
    c.canonicalize();
    return c.get_str();
}

/// Exact conversion helpers.
inline Rat to_rat(const Int& x) { return Rat(x); }
inline QVec to_rat(const IVec& v) {
    QVec out;
    out.reserve(v.size());
    for (const Int& x : v) out.emplace_back(x);
    return out;
}

/// gcd of the absolute values of all entries (0 for the zero vector).
Int content(const IVec& v);

/// least common multiple of two positive integers.
Int lcm_int(const Int& a, const Int& b);

/// Denominator lcm of a rational vector (1 if all entries integral).
Int denominator_lcm(const QVec& v);

/// Clear denominators and divide by the content: the primitive integer vector
/// positively proportional to `v`.  `v` must be nonzero.
IVec primitive_scale(const QVec& v);

} // namespace toricg2
