#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mwtate {

enum class ErrorCode {
    NonComposable,
    DimensionMismatch,
    InvalidParity,
    EvenInput,
    EvenS,
    InvalidComplex,
    OddBlockNotRealizable,
    IllegalEntry,
    NonComposableResult,
    NonpositiveL,
    PageTooSmall,
    InexactCouple,
    RankTooSmall,
    OddCodimension,
    IllegalGysinEntry,
    InvalidArgument,
    Malformed,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace mwtate
