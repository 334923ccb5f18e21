#include "posetlab/error.hpp"

namespace posetlab {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::cycle_detected: return "CycleDetected";
        case ErrorKind::index_out_of_range: return "IndexOutOfRange";
        case ErrorKind::too_large: return "TooLarge";
        case ErrorKind::bad_chain: return "BadChain";
        case ErrorKind::bad_params: return "BadParams";
        case ErrorKind::bad_triple: return "BadTriple";
        case ErrorKind::hypotheses_not_met: return "HypothesesNotMet";
        case ErrorKind::no_pivot: return "NoPivot";
        case ErrorKind::case_exhaustion: return "CaseExhaustion";
        case ErrorKind::degenerate_slice: return "DegenerateSlice";
        case ErrorKind::io_error: return "IoError";
        case ErrorKind::parse_error: return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace posetlab
