#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zsr {

enum class ErrorKind {
    InvalidArgument,
    CyclicInput,
    DuplicateEdge,
    IndexOutOfRange,
    NotBushy,
    InsufficientTriples,
    EmptyInputSet,
    MixedModulus,
    NoDominantColor,
    SelectionExhausted,
    PreconditionFailed,
    GreedyStuck,
    MonochromaticityViolated,
    NoZeroSumCopy,
    DivisibilityViolation,
    BudgetExceeded,
    ParityViolation,
    ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so callers can dispatch
/// (the embedder falls back on PreconditionFailed, the CLI maps kinds to exit codes).
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

} // namespace zsr
