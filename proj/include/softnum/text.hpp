#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "softnum/soft_number.hpp"

namespace softnum {

/// Significant digits used by the canonical textual form.
inline constexpr int kDefaultPrintDigits = 10;
/// Enough digits for a bit-exact round trip of any double.
inline constexpr int kRoundTripDigits = 17;

/// Shortest-general formatting of a double with the given significant digits.
/// Negative zero prints as "0".
std::string formatReal(double value, int digits = kDefaultPrintDigits);

/// Canonical form `<a>z0 + <b>`, or `<a>z0 - <|b|>` when b is negative.
std::string toString(const SoftNumber& p, int digits = kDefaultPrintDigits);

/// Accepts the canonical form plus the relaxed spellings `3` (≡ `0z0 + 3`),
/// `2z0` (≡ `2z0 + 0`), `z0`, `2z0 + -3`, `3 + 2z0` and arbitrary blanks.
/// Throws ParseError with the offending offset.
SoftNumber parseSoftNumber(std::string_view text);

std::ostream& operator<<(std::ostream& os, const SoftNumber& p);

}  // namespace softnum
