#include "aptree/errors.hpp"

namespace aptree {

const char* errc_name(errc code) noexcept {
    switch (code) {
        case errc::uncoverable_text:        return "UncoverableText";
        case errc::unknown_token:           return "UnknownToken";
        case errc::cap_exceeded:            return "CapExceeded";
        case errc::unknown_state:           return "UnknownState";
        case errc::mask_violation:          return "MaskViolation";
        case errc::backend_unavailable:     return "BackendUnavailable";
        case errc::mask_exhausted:          return "MaskExhausted";
        case errc::constraint_rejected:     return "ConstraintRejected";
        case errc::constraint_violated:     return "ConstraintViolatedByServer";
        case errc::judge_unavailable:       return "JudgeUnavailable";
        case errc::unparseable_verdict:     return "UnparseableVerdict";
        case errc::empty_segment:           return "EmptySegment";
        case errc::unknown_node:            return "UnknownNode";
        case errc::all_branches_deprecated: return "AllBranchesDeprecated";
        case errc::no_positive_path:        return "NoPositivePath";
        case errc::parse_error:             return "ParseError";
        case errc::config_error:            return "ConfigError";
        case errc::io_error:                return "IoError";
    }
    return "UnknownError";
}

} // namespace aptree
