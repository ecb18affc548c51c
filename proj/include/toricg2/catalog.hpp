#pragma once

/// @file catalog.hpp
/// @brief Built-in families of fans used as worked examples and test inputs.
///
/// Every builder validates the fan it constructs before returning it, so a
/// catalog fan can be trusted as a complete simplicial fan.

#include "toricg2/fan.hpp"

#include <string>
#include <vector>

namespace toricg2 {

/// Projective d-space: rays e_1..e_d and -(e_1+...+e_d).
Fan projective_space(int d);

/// Hirzebruch surface F_a: rays (1,0), (0,1), (-1,a), (0,-1).
Fan hirzebruch(const Int& a);

/// The weighted projective plane P(1,1,2): rays (0,1), (1,0), (-1,-2).
Fan weighted_p2_112();

/// P^1 x P^1: rays (1,0), (-1,0), (0,1), (0,-1).
Fan product_p1_p1();

/// P^2 blown up in k torus-fixed points, 0 <= k <= 3; blow-ups insert the
/// rays (1,1), (0,-1), (-1,0) in that order.
Fan blowup_p2(int k);

/// A terminal Fano fourfold of Picard number 2 with six rays
/// e_1..e_4, (-1,-2,-1,0), (0,-1,-2,-1) and nine maximal cones.
Fan terminal_fano_4fold();

/// The d-dimensional terminal Fano family (d >= 4) with rays
/// x_i = e_i (i <= d-2), x_{d-1} = -(e_1+...+e_{d-2}) - (d-2) e_{d-1},
/// x_d = e_{d-1}, y_1 = -e_{d-1} - e_d, y_2 = e_d and 2d maximal cones.
Fan terminal_fano_dfold(int d);

/// A Gorenstein Fano threefold of Picard number 2 with rays
/// (1,0,0), (0,1,0), (0,0,1), (0,-2,-1), (-1,-1,0) and six maximal cones.
Fan gorenstein_fano_3fold();

/// One catalog entry: a stable name, a one-line description, and whether the
/// builder takes an integer parameter.
struct CatalogEntry {
    std::string name;
    std::string description;
    bool takes_parameter;
};

/// All catalog entries in a fixed order.
const std::vector<CatalogEntry>& catalog_entries();

/// Build a catalog fan by name.  Builders marked as parametric require
/// @p param; the others reject it.  Unknown names and out-of-range
/// parameters raise std::invalid_argument.
Fan catalog_build(const std::string& name, std::optional<long> param = std::nullopt);

} // namespace toricg2
