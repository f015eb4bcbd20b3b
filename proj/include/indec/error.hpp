#pragma once

#include <stdexcept>
#include <string>

namespace indec {

enum class ErrorKind {
    InvalidArgument,
    CountExceedsBound,
    NotPrimePower,
    UnsupportedOrder,
    InsufficientSquares,
    SameGroup,
    UnsupportedPattern,
    SamePart,
    UnsupportedP,
    SearchExhausted,
    NoFeasibleParameters,
    DivisibilityViolation,
    NoDecomposition,
    BudgetExceeded,
    CapExceeded,
    InternalInvariant,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind so
/// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace indec
