#pragma once

/// @file report.hpp
/// @brief Machine-readable analysis reports with stable, schema-versioned JSON.
///
/// Identical inputs produce byte-identical reports: all maps are emitted in a
/// fixed key order, cones are sorted, and every rational is rendered exactly
/// as `p/q` text.

#include "toricg2/fan.hpp"
#include "toricg2/gamma2.hpp"

#include <json.hpp>

#include <string>

namespace toricg2 {

using ordered_json = nlohmann::ordered_json;

/// Library name used in report provenance.
const char* tool_name();

/// Library version used in report provenance.
const char* tool_version();

/// FNV-1a 64-bit hash of arbitrary bytes, rendered as "fnv1a64:%016x".
std::string input_hash(const std::string& bytes);

/// Full analysis report for `check`: structure, singularities, Fano test and
/// the gamma2 classification.  @p input_bytes is the raw input text whose
/// hash ties the report to its source; @p deep records the validation depth.
ordered_json check_report(const Fan& fan, const std::string& input_bytes, bool deep);

/// Report for `gamma2 --tau`: the quadrilateral value and its sign.  The
/// value equals gamma2 . V(tau) only up to a positive rational factor, so the
/// sign is the authoritative part; the note field says so.
ordered_json gamma2_report_json(const Fan& fan, const std::vector<int>& tau,
                                const std::string& input_bytes);

/// Report for `ne2`: the two-sided ray partition, the sorted chains with
/// their ratios, and the generators S1, S2, S3 with absence flags.
ordered_json ne2_report_json(const Fan& fan, const std::string& input_bytes);

/// Report for `surface`: the D_v^2 table and gamma2 for a 2-dimensional fan.
ordered_json surface_report_json(const Fan& fan, const std::string& input_bytes);

/// Render a report as stable two-space-indented JSON with trailing newline.
std::string dump_report(const ordered_json& j);

} // namespace toricg2
