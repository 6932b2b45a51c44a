#include "syscodes/error.h"

namespace syscodes {

const char *error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidArgument:
            return "InvalidArgument";
        case ErrorKind::LengthMismatch:
            return "LengthMismatch";
        case ErrorKind::Parse:
            return "Parse";
        case ErrorKind::TooLarge:
            return "TooLarge";
        case ErrorKind::Unsolvable:
            return "Unsolvable";
        case ErrorKind::AntiCommuting:
            return "AntiCommuting";
        case ErrorKind::Dependent:
            return "Dependent";
        case ErrorKind::MinusIdentity:
            return "MinusIdentity";
        case ErrorKind::PhaseNotReal:
            return "PhaseNotReal";
        case ErrorKind::ZeroLogicalQubits:
            return "ZeroLogicalQubits";
        case ErrorKind::NotOrthogonal:
            return "NotOrthogonal";
        case ErrorKind::BoundarySquareNonzero:
            return "BoundarySquareNonzero";
        case ErrorKind::DimensionOutOfRange:
            return "DimensionOutOfRange";
        case ErrorKind::TrivialHomology:
            return "TrivialHomology";
        case ErrorKind::NotClosedSurface:
            return "NotClosedSurface";
        case ErrorKind::NotHyperbolic:
            return "NotHyperbolic";
    }
    return "Unknown";
}

bool is_precondition_failure(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse:
        case ErrorKind::InvalidArgument:
        case ErrorKind::LengthMismatch:
            return false;
        default:
            return true;
    }
}

Error::Error(ErrorKind kind, const std::string &message, size_t first, size_t second)
    : std::runtime_error(message), kind_(kind), first_(first), second_(second) {
}

}  // namespace syscodes
