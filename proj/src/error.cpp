#include "mstable/error.hpp"

namespace mstable {

std::string_view error_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::InvalidIndex: return "INVALID_INDEX";
    case ErrorCode::OutOfRange: return "OUT_OF_RANGE";
    case ErrorCode::SpaceMismatch: return "SPACE_MISMATCH";
    case ErrorCode::DivisionByZero: return "DIVISION_BY_ZERO";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::NotBig: return "NOT_BIG";
    case ErrorCode::Disconnected: return "DISCONNECTED";
    case ErrorCode::GenusNotOne: return "GENUS_NOT_ONE";
    case ErrorCode::NoHub: return "NO_HUB";
    case ErrorCode::InvalidSubcurve: return "INVALID_SUBCURVE";
    case ErrorCode::NonTermination: return "NON_TERMINATION";
    case ErrorCode::PreconditionViolated: return "PRECONDITION_VIOLATED";
    case ErrorCode::AllSingletons: return "ALL_SINGLETONS";
    case ErrorCode::EmptyStratum: return "EMPTY";
    case ErrorCode::EnumerationCap: return "ENUMERATION_CAP";
    case ErrorCode::InvariantBreach: return "INVARIANT_BREACH";
    }
    return "UNKNOWN";
}

}  // namespace mstable
