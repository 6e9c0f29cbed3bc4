#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace softnum {

enum class ErrorCode {
    NonFinite,
    ArithmeticOverflow,
    DivisionByZeroReal,
    DomainError,
    PoleError,
    MismatchedComponents,
    InvalidParameter,
    InvertedInterval,
    WidthOutOfRange,
    ZeroInput,
    ParallelLines,
    OutOfRange,
    ParseError,
    IoError,
};

const char* toString(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(toString(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Parse failure with a zero-based character offset into the input text.
class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& message)
        : Error(ErrorCode::ParseError, message + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace softnum
