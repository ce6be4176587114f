#pragma once

#include <stdexcept>
#include <string>

namespace planarsep {

/// Failure categories surfaced by the library.  The CLI maps these onto
/// process exit codes: input/validation problems exit with 2, verification
/// failures with 3, internal invariant violations with 4.
enum class errc {
    // input / validation
    too_small,
    not_symmetric,
    not_triangulated,
    euler_violation,
    disconnected,
    bad_outer_face,
    parse_error,
    io_error,
    // operation preconditions
    single_node,
    bad_seed_path,
    parity_violation,
    not_simple,
    no_convergence,
    // internal invariant violations (indicate a bug or corrupted input)
    trace_failure,
    ladder_empty,
    degenerate_intersection,
    internal_contradiction,
    internal_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::too_small: return "TooSmall";
        case errc::not_symmetric: return "NotSymmetric";
        case errc::not_triangulated: return "NotTriangulated";
        case errc::euler_violation: return "EulerViolation";
        case errc::disconnected: return "Disconnected";
        case errc::bad_outer_face: return "BadOuterFace";
        case errc::parse_error: return "ParseError";
        case errc::io_error: return "IoError";
        case errc::single_node: return "SingleNode";
        case errc::bad_seed_path: return "BadSeedPath";
        case errc::parity_violation: return "ParityViolation";
        case errc::not_simple: return "NotSimple";
        case errc::no_convergence: return "NoConvergence";
        case errc::trace_failure: return "TraceFailure";
        case errc::ladder_empty: return "LadderEmpty";
        case errc::degenerate_intersection: return "DegenerateIntersection";
        case errc::internal_contradiction: return "InternalContradiction";
        case errc::internal_error: return "InternalError";
    }
    return "UnknownError";
}

/// True for codes that signal an internal invariant violation rather than
/// bad input.
inline bool errc_is_internal(errc c) {
    switch (c) {
        case errc::trace_failure:
        case errc::ladder_empty:
        case errc::degenerate_intersection:
        case errc::internal_contradiction:
        case errc::internal_error:
            return true;
        default:
            return false;
    }
}

class error : public std::runtime_error {
public:
    error(errc c, const std::string& what)
        : std::runtime_error(std::string(errc_name(c)) + ": " + what), code_(c) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc c, const std::string& what) { throw error(c, what); }

inline void require(bool cond, errc c, const std::string& what) {
    if (!cond) raise(c, what);
}

} // namespace planarsep
