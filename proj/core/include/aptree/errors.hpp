#pragma once

#include <stdexcept>
#include <string>

namespace aptree {

enum class errc {
    // text codec
    uncoverable_text,
    unknown_token,
    // suppression / masking
    cap_exceeded,
    unknown_state,
    mask_violation,
    // generation backends
    backend_unavailable,
    mask_exhausted,
    constraint_rejected,
    constraint_violated,
    // judges
    judge_unavailable,
    unparseable_verdict,
    // tree construction
    empty_segment,
    unknown_node,
    all_branches_deprecated,
    // reranking
    no_positive_path,
    // plumbing
    parse_error,
    config_error,
    io_error,
};

const char* errc_name(errc code) noexcept;

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) {
    throw error(code, std::string(errc_name(code)) + ": " + what);
}

} // namespace aptree
