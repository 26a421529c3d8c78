#include "zsr/error.hpp"

namespace zsr {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::CyclicInput: return "CyclicInput";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotBushy: return "NotBushy";
    case ErrorKind::InsufficientTriples: return "InsufficientTriples";
    case ErrorKind::EmptyInputSet: return "EmptyInputSet";
    case ErrorKind::MixedModulus: return "MixedModulus";
    case ErrorKind::NoDominantColor: return "NoDominantColor";
    case ErrorKind::SelectionExhausted: return "SelectionExhausted";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::GreedyStuck: return "GreedyStuck";
    case ErrorKind::MonochromaticityViolated: return "MonochromaticityViolated";
    case ErrorKind::NoZeroSumCopy: return "NoZeroSumCopy";
    case ErrorKind::DivisibilityViolation: return "DivisibilityViolation";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ParityViolation: return "ParityViolation";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind)
{
}

void fail(ErrorKind kind, const std::string& message)
{
    throw Error(kind, message);
}

} // namespace zsr
