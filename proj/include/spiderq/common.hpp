#pragma once

#include <stdexcept>
#include <string>

namespace spiderq {

// Error hierarchy used across the library. The CLI maps these to exit codes.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input (braid word, slice list, PD code, CLI grammar).
struct parse_error : error {
    using error::error;
};

// A well-formed input that cannot be evaluated (boundary mismatch, bad color,
// missing component, ...).
struct eval_error : error {
    using error::error;
};

// A broken internal invariant (non-exact divided power, inconsistent
// convention). These indicate a bug, not a user mistake.
struct internal_error : error {
    using error::error;
};

inline void check_internal(bool ok, const std::string& what) {
    if (!ok) throw internal_error(what);
}

} // namespace spiderq
