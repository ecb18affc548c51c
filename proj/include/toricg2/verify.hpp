#pragma once

/// @file verify.hpp
/// @brief Built-in verification suite: every worked example and property the
/// library is expected to reproduce, run as named pass/fail fixtures.
///
/// The fixtures only assert values that were computed independently (by hand
/// or by a second implementation) or that restate exact invariants; they are
/// grouped by the acceptance criterion they witness.

#include <string>
#include <vector>

#include <json.hpp>

namespace toricg2 {

/// One verification fixture outcome.
struct FixtureResult {
    std::string name;   ///< stable fixture identifier, e.g. "fourfold.quad-8"
    int criterion;      ///< acceptance criterion number (1..8)
    bool pass;
    std::string detail; ///< measured values on success, diagnosis on failure
};

/// Run the complete verification suite; never throws (failures are reported
/// in the results).  Deterministic: randomized fixtures use fixed seeds.
std::vector<FixtureResult> run_verification();

/// Render verification results as a fixed-order pass/fail matrix.
std::string verification_matrix(const std::vector<FixtureResult>& results);

/// Render verification results as a schema-versioned JSON report.
nlohmann::ordered_json verification_json(const std::vector<FixtureResult>& results);

} // namespace toricg2
