#include "softnum/text.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <optional>
#include <ostream>

#include "softnum/error.hpp"

namespace softnum {

std::string formatReal(double value, int digits) {
    if (value == 0.0) return "0";
    std::array<char, 64> buffer{};
    auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value,
                                   std::chars_format::general, digits);
    if (ec != std::errc{}) throw Error(ErrorCode::OutOfRange, "cannot format value");
    return std::string(buffer.data(), end);
}

std::string toString(const SoftNumber& p, int digits) {
    std::string out = formatReal(p.soft(), digits);
    out += "z0 ";
    if (p.real() < 0.0) {
        out += "- ";
        out += formatReal(-p.real(), digits);
    } else {
        out += "+ ";
        out += formatReal(p.real(), digits);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const SoftNumber& p) { return os << toString(p); }

namespace {

class LiteralScanner {
public:
    explicit LiteralScanner(std::string_view text) : text_(text) {}

    void skipBlanks() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }

    bool atEnd() {
        skipBlanks();
        return pos_ == text_.size();
    }

    std::size_t position() const noexcept { return pos_; }

    bool consume(char c) {
        skipBlanks();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    /// One signed term: `[sign] number [z0]` or `[sign] z0`.
    struct Term {
        double coeff;
        bool soft;
    };

    Term term() {
        skipBlanks();
        double sign = 1.0;
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
            if (text_[pos_] == '-') sign = -1.0;
            ++pos_;
            skipBlanks();
        }
        const std::size_t start = pos_;
        double magnitude = 1.0;
        bool haveNumber = false;
        if (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
            auto [end, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), magnitude);
            if (ec != std::errc{} || !std::isfinite(magnitude)) throw ParseError(start, "malformed number");
            pos_ = static_cast<std::size_t>(end - text_.data());
            haveNumber = true;
        }
        skipBlanks();
        if (text_.substr(pos_, 2) == "z0") {
            pos_ += 2;
            return {sign * magnitude, true};
        }
        if (!haveNumber) throw ParseError(start, "expected a number or z0");
        return {sign * magnitude, false};
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

SoftNumber parseSoftNumber(std::string_view text) {
    LiteralScanner scanner(text);
    if (scanner.atEnd()) throw ParseError(scanner.position(), "empty soft number");

    std::optional<double> soft;
    std::optional<double> real;
    auto place = [&](LiteralScanner::Term t, std::size_t at) {
        auto& slot = t.soft ? soft : real;
        if (slot) throw ParseError(at, t.soft ? "duplicate soft term" : "duplicate real term");
        slot = t.coeff;
    };

    place(scanner.term(), scanner.position());
    if (!scanner.atEnd()) {
        const std::size_t at = scanner.position();
        double joinSign = 1.0;
        if (scanner.consume('-')) {
            joinSign = -1.0;
        } else if (!scanner.consume('+')) {
            throw ParseError(at, "expected '+' or '-'");
        }
        auto second = scanner.term();
        second.coeff *= joinSign;
        place(second, at);
    }
    if (!scanner.atEnd()) throw ParseError(scanner.position(), "unexpected trailing input");
    return SoftNumber{soft.value_or(0.0), real.value_or(0.0)};
}

}  // namespace softnum
