#pragma once

#include <stdexcept>
#include <string>

namespace heightlab {

enum class errc {
    parse_error,
    invalid_argument,
    not_symmetric,
    not_positive_definite,
    rank_mismatch,
    singular_matrix,
    orthogonality_violation,
    divisibility_failure,
    not_homogeneous,
    not_invariant,
    no_semistable_component,
    nonzero_trace,
    degenerate_input,
    degree_mismatch,
    internal,
};

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::parse_error: return "parse_error";
    case errc::invalid_argument: return "invalid_argument";
    case errc::not_symmetric: return "not_symmetric";
    case errc::not_positive_definite: return "not_positive_definite";
    case errc::rank_mismatch: return "rank_mismatch";
    case errc::singular_matrix: return "singular_matrix";
    case errc::orthogonality_violation: return "orthogonality_violation";
    case errc::divisibility_failure: return "divisibility_failure";
    case errc::not_homogeneous: return "not_homogeneous";
    case errc::not_invariant: return "not_invariant";
    case errc::no_semistable_component: return "no_semistable_component";
    case errc::nonzero_trace: return "nonzero_trace";
    case errc::degenerate_input: return "degenerate_input";
    case errc::degree_mismatch: return "degree_mismatch";
    case errc::internal: return "internal";
    }
    return "unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
    throw error(code, what);
}

inline void require(bool cond, errc code, const std::string& what) {
    if (!cond) fail(code, what);
}

} // namespace heightlab
