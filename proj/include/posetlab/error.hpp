#pragma once

#include <stdexcept>
#include <string>

namespace posetlab {

enum class ErrorKind {
    cycle_detected,
    index_out_of_range,
    too_large,
    bad_chain,
    bad_params,
    bad_triple,
    hypotheses_not_met,
    no_pivot,
    case_exhaustion,
    degenerate_slice,
    io_error,
    parse_error,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace posetlab
