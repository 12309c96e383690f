#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace favoid {

enum class ErrorCode {
    LoopEdge,
    BadVertexId,
    BadEdgeId,
    NotADirectedPath,
    OutOfRangeForbidden,
    BudgetExceeded,
    DegreeTooHigh,
    NotRegular,
    WrongDegree,
    MalformedBounds,
    HypothesisViolated,
    PreconditionViolated,
    StaleLasso,
    BoundViolated,
    NonEmptyListAtLowDegree,
    NotTwoDegenerate,
    BadDecomposition,
    SubSolverFailed,
    DegreeTooSmall,
    ParityError,
    BadParameter,
    ParseError,
    InternalError,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace favoid
