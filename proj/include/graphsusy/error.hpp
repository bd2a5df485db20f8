#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace graphsusy {

enum class ErrorCode {
    MalformedInput,
    DuplicateId,
    SelfLoop,
    ParallelEdge,
    DanglingEndpoint,
    UnknownId,
    InvalidArgument,
    DimensionMismatch,
    NotSymmetric,
    NoConvergence,
    AmbiguousKernel,
    GroupingAmbiguity,
    RouteDisagreement,
    CapExceeded,
    NotMorse,
    IllegalMove,
    ZeroState,
    Disconnected,
    TooLarge,
};

constexpr std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::MalformedInput: return "malformed input";
    case ErrorCode::DuplicateId: return "duplicate id";
    case ErrorCode::SelfLoop: return "self-loop";
    case ErrorCode::ParallelEdge: return "parallel edge";
    case ErrorCode::DanglingEndpoint: return "dangling endpoint";
    case ErrorCode::UnknownId: return "unknown id";
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::DimensionMismatch: return "dimension mismatch";
    case ErrorCode::NotSymmetric: return "non-symmetric input";
    case ErrorCode::NoConvergence: return "no convergence";
    case ErrorCode::AmbiguousKernel: return "ambiguous kernel";
    case ErrorCode::GroupingAmbiguity: return "grouping ambiguity";
    case ErrorCode::RouteDisagreement: return "route disagreement";
    case ErrorCode::CapExceeded: return "cap exceeded";
    case ErrorCode::NotMorse: return "not a discrete Morse function";
    case ErrorCode::IllegalMove: return "illegal move";
    case ErrorCode::ZeroState: return "zero state";
    case ErrorCode::Disconnected: return "disconnected graph";
    case ErrorCode::TooLarge: return "too large";
    }
    return "unknown error";
}

/// Library-wide exception. `subject()` names the offending id or quantity
/// when there is one.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail, std::string subject = {})
        : std::runtime_error(std::string(to_string(code)) + ": " + detail)
        , code_(code)
        , subject_(std::move(subject))
    {
    }

    ErrorCode code() const noexcept { return code_; }
    const std::string& subject() const noexcept { return subject_; }

private:
    ErrorCode code_;
    std::string subject_;
};

} // namespace graphsusy
