#ifndef SYSCODES_ERROR_H
#define SYSCODES_ERROR_H

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>

namespace syscodes {

enum class ErrorKind {
    InvalidArgument,
    LengthMismatch,
    Parse,
    TooLarge,
    Unsolvable,
    // stabilizer groups
    AntiCommuting,
    Dependent,
    MinusIdentity,
    PhaseNotReal,
    ZeroLogicalQubits,
    // css
    NotOrthogonal,
    // cell complexes
    BoundarySquareNonzero,
    DimensionOutOfRange,
    TrivialHomology,
    NotClosedSurface,
    // hyperbolic geometry
    NotHyperbolic,
};

const char *error_kind_name(ErrorKind kind);

/// True for kinds that signal a violated mathematical precondition on otherwise
/// well-formed input (the CLI maps these to exit code 3).
bool is_precondition_failure(ErrorKind kind);

inline constexpr size_t NO_INDEX = std::numeric_limits<size_t>::max();

/// Every failure raised by the library. `first` / `second` carry the indices the
/// kind refers to (generator pair, boundary dimension and witness column, ...).
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message, size_t first = NO_INDEX, size_t second = NO_INDEX);

    ErrorKind kind() const {
        return kind_;
    }
    size_t first() const {
        return first_;
    }
    size_t second() const {
        return second_;
    }

   private:
    ErrorKind kind_;
    size_t first_;
    size_t second_;
};

}  // namespace syscodes

#endif
