#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace higgs_lab {

enum class ErrorCode {
    ZeroRank,
    MalformedPolynomial,
    InvalidArrow,
    AmbientMismatch,
    InvalidModel,
    IncompleteTorsionClosure,
    PreconditionUnmet,
    NotSemistable,
    BrokenInvariant,
    TooLarge,
    AmbiguousMaximizer,
    UnknownId,
    ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace higgs_lab
