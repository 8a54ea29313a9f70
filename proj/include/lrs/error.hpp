#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lrs {

enum class ErrorCode {
    NotPrime,
    NotMonic,
    ReducibleModP,
    ReducibleModIdeal,
    LiftDivergence,
    TooLarge,
    SpecMismatch,
    NotUnit,
    NotInvertible,
    Inconsistent,
    NotABasis,
    DimensionMismatch,
    PartitionMismatch,
    TooLargeToEnumerate,
    LeadingNotUnit,
    MsrdPropertyViolated,
    ConditionViolated,
    EllTooLarge,
    NotCoprime,
    ValidationFailed,
    BadDimension,
    MsrdViolated,
    InsufficientFreeRank,
    SamplingExhausted,
    BudgetInfeasible,
    BoundViolated,
    ParseError,
};

constexpr std::string_view code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::NotMonic: return "NotMonic";
        case ErrorCode::ReducibleModP: return "ReducibleModP";
        case ErrorCode::ReducibleModIdeal: return "ReducibleModIdeal";
        case ErrorCode::LiftDivergence: return "LiftDivergence";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::SpecMismatch: return "SpecMismatch";
        case ErrorCode::NotUnit: return "NotUnit";
        case ErrorCode::NotInvertible: return "NotInvertible";
        case ErrorCode::Inconsistent: return "Inconsistent";
        case ErrorCode::NotABasis: return "NotABasis";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::PartitionMismatch: return "PartitionMismatch";
        case ErrorCode::TooLargeToEnumerate: return "TooLargeToEnumerate";
        case ErrorCode::LeadingNotUnit: return "LeadingNotUnit";
        case ErrorCode::MsrdPropertyViolated: return "MsrdPropertyViolated";
        case ErrorCode::ConditionViolated: return "ConditionViolated";
        case ErrorCode::EllTooLarge: return "EllTooLarge";
        case ErrorCode::NotCoprime: return "NotCoprime";
        case ErrorCode::ValidationFailed: return "ValidationFailed";
        case ErrorCode::BadDimension: return "BadDimension";
        case ErrorCode::MsrdViolated: return "MsrdViolated";
        case ErrorCode::InsufficientFreeRank: return "InsufficientFreeRank";
        case ErrorCode::SamplingExhausted: return "SamplingExhausted";
        case ErrorCode::BudgetInfeasible: return "BudgetInfeasible";
        case ErrorCode::BoundViolated: return "BoundViolated";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can report a stable identifier.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace lrs
