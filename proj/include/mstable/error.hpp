#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mstable {

enum class ErrorCode {
    InvalidArgument,
    InvalidIndex,
    OutOfRange,
    SpaceMismatch,
    DivisionByZero,
    ParseError,
    NotBig,
    Disconnected,
    GenusNotOne,
    NoHub,
    InvalidSubcurve,
    NonTermination,
    PreconditionViolated,
    AllSingletons,
    EmptyStratum,
    EnumerationCap,
    InvariantBreach,
};

// Upper-case name used in CLI diagnostics, e.g. "SPACE_MISMATCH".
std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, ErrorCode code, const std::string& what) {
    if (!cond) fail(code, what);
}

}  // namespace mstable
