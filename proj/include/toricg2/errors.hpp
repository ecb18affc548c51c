#pragma once
/**
 * @file errors.hpp
 * @brief Exception taxonomy used across the library.
 *
 * The split mirrors the process exit codes of the command line tool:
 *  - parse_error / invalid_fan_error / unsupported_error and plain
 *    std::invalid_argument describe bad or out-of-scope *input* (exit 2);
 *  - internal_error flags a violated internal invariant, i.e. a bug or a
 *    mathematical impossibility the code refuses to hide (exit 3).
 */

#include <stdexcept>
#include <string>

namespace toricg2 {

/// Malformed fan file / JSON input.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// Structurally well-formed input that fails fan validation.
struct invalid_fan_error : std::runtime_error {
    explicit invalid_fan_error(const std::string& what) : std::runtime_error(what) {}
};

/// Valid input outside the supported scope (e.g. rho >= 3 classification).
struct unsupported_error : std::runtime_error {
    explicit unsupported_error(const std::string& what) : std::runtime_error(what) {}
};

/// Violated internal invariant; never the caller's fault.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

/// Throw internal_error unless `cond` holds.
inline void require_internal(bool cond, const std::string& what) {
    if (!cond) throw internal_error(what);
}

} // namespace toricg2
