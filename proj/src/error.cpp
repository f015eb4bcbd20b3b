#include "indec/error.hpp"

namespace indec {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::CountExceedsBound: return "CountExceedsBound";
    case ErrorKind::NotPrimePower: return "NotPrimePower";
    case ErrorKind::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorKind::InsufficientSquares: return "InsufficientSquares";
    case ErrorKind::SameGroup: return "SameGroup";
    case ErrorKind::UnsupportedPattern: return "UnsupportedPattern";
    case ErrorKind::SamePart: return "SamePart";
    case ErrorKind::UnsupportedP: return "UnsupportedP";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::NoFeasibleParameters: return "NoFeasibleParameters";
    case ErrorKind::DivisibilityViolation: return "DivisibilityViolation";
    case ErrorKind::NoDecomposition: return "NoDecomposition";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::InternalInvariant: return "InternalInvariant";
    }
    return "Unknown";
}

} // namespace indec
