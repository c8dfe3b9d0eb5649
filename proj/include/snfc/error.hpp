#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace snfc {

enum class ErrorCode {
    NonPrime,
    DegreeZero,
    FieldTooLarge,
    DivideByZero,
    FieldMismatch,
    DimensionMismatch,
    Singular,
    PrimeFieldInput,
    Cycle,
    SourceHasInEdge,
    SinkHasOutEdge,
    UnreachableSink,
    MalformedInput,
    UnknownEdge,
    UnknownNode,
    TargetInU,
    EmptyTarget,
    AllZeroFunction,
    ValidationFailure,
    NoFeasibleCut,
    TooLarge,
    RateExceedsMinCut,
    FieldTooSmallForMulticast,
    ReversalInconsistent,
    FieldTooSmall,
    SingularB,
    RateInfeasible,
    ConstructionFailed,
    ShapeMismatch,
};

inline constexpr std::string_view code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::NonPrime: return "NonPrime";
        case ErrorCode::DegreeZero: return "DegreeZero";
        case ErrorCode::FieldTooLarge: return "FieldTooLarge";
        case ErrorCode::DivideByZero: return "DivideByZero";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::Singular: return "Singular";
        case ErrorCode::PrimeFieldInput: return "PrimeFieldInput";
        case ErrorCode::Cycle: return "Cycle";
        case ErrorCode::SourceHasInEdge: return "SourceHasInEdge";
        case ErrorCode::SinkHasOutEdge: return "SinkHasOutEdge";
        case ErrorCode::UnreachableSink: return "UnreachableSink";
        case ErrorCode::MalformedInput: return "MalformedInput";
        case ErrorCode::UnknownEdge: return "UnknownEdge";
        case ErrorCode::UnknownNode: return "UnknownNode";
        case ErrorCode::TargetInU: return "TargetInU";
        case ErrorCode::EmptyTarget: return "EmptyTarget";
        case ErrorCode::AllZeroFunction: return "AllZeroFunction";
        case ErrorCode::ValidationFailure: return "ValidationFailure";
        case ErrorCode::NoFeasibleCut: return "NoFeasibleCut";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::RateExceedsMinCut: return "RateExceedsMinCut";
        case ErrorCode::FieldTooSmallForMulticast: return "FieldTooSmallForMulticast";
        case ErrorCode::ReversalInconsistent: return "ReversalInconsistent";
        case ErrorCode::FieldTooSmall: return "FieldTooSmall";
        case ErrorCode::SingularB: return "SingularB";
        case ErrorCode::RateInfeasible: return "RateInfeasible";
        case ErrorCode::ConstructionFailed: return "ConstructionFailed";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(code_name(code)) + ": " + detail), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace snfc
