#include "softnum/error.hpp"

namespace softnum {

const char* toString(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NonFinite: return "non-finite";
        case ErrorCode::ArithmeticOverflow: return "arithmetic-overflow";
        case ErrorCode::DivisionByZeroReal: return "division-by-zero-real";
        case ErrorCode::DomainError: return "domain-error";
        case ErrorCode::PoleError: return "pole-error";
        case ErrorCode::MismatchedComponents: return "mismatched-components";
        case ErrorCode::InvalidParameter: return "invalid-parameter";
        case ErrorCode::InvertedInterval: return "inverted-interval";
        case ErrorCode::WidthOutOfRange: return "width-out-of-range";
        case ErrorCode::ZeroInput: return "zero-input";
        case ErrorCode::ParallelLines: return "parallel-lines";
        case ErrorCode::OutOfRange: return "out-of-range";
        case ErrorCode::ParseError: return "parse-error";
        case ErrorCode::IoError: return "io-error";
    }
    return "unknown";
}

}  // namespace softnum
