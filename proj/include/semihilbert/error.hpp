#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace semihilbert {

enum class ErrorKind {
    InvalidInput,
    NotSquare,
    NotHermitian,
    NotPSD,
    NoConvergence,
    DimensionMismatch,
    NotInBA,
    NotInBAHalf,
    NotAPositive,
    NotSupportedOnRange,
    DegenerateSpace,
    InvalidParams,
    NotUnitA,
    InvalidConfig,
    Parse,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotPSD: return "NotPSD";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotInBA: return "NotInBA";
    case ErrorKind::NotInBAHalf: return "NotInBAHalf";
    case ErrorKind::NotAPositive: return "NotAPositive";
    case ErrorKind::NotSupportedOnRange: return "NotSupportedOnRange";
    case ErrorKind::DegenerateSpace: return "DegenerateSpace";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::NotUnitA: return "NotUnitA";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace semihilbert
