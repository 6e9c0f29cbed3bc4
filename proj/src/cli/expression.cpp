#include "softnum/expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "softnum/analytic.hpp"
#include "softnum/error.hpp"

namespace softnum {

namespace {

class Evaluator {
public:
    explicit Evaluator(std::string_view text) : text_(text) {}

    SoftNumber run() {
        SoftNumber result = expr();
        skipBlanks();
        if (pos_ != text_.size()) throw ParseError(pos_, "unexpected '" + std::string(1, text_[pos_]) + "'");
        return result;
    }

private:
    void skipBlanks() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skipBlanks();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!accept(c)) {
            if (pos_ >= text_.size()) throw ParseError(pos_, std::string("expected '") + c + "' before end of input");
            throw ParseError(pos_, std::string("expected '") + c + "'");
        }
    }

    SoftNumber expr() {
        SoftNumber value = term();
        for (;;) {
            if (accept('+')) {
                value = value + term();
            } else if (accept('-')) {
                value = value - term();
            } else {
                return value;
            }
        }
    }

    SoftNumber term() {
        SoftNumber value = unary();
        for (;;) {
            if (accept('*')) {
                value = value * unary();
            } else if (accept('/')) {
                value = value / unary();
            } else {
                return value;
            }
        }
    }

    SoftNumber unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    SoftNumber power() {
        SoftNumber base = primary();
        if (!accept('^')) return base;
        bool negative = false;
        if (accept('-')) {
            negative = true;
        } else {
            accept('+');
        }
        skipBlanks();
        const std::size_t start = pos_;
        std::uint32_t exponent = 0;
        auto [end, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), exponent);
        if (ec == std::errc::result_out_of_range) throw ParseError(start, "exponent too large");
        if (ec != std::errc{}) throw ParseError(start, "expected an integer exponent");
        pos_ = static_cast<std::size_t>(end - text_.data());
        if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E')) {
            throw ParseError(start, "exponent must be an integer");
        }
        const SoftNumber raised = powNat(base, exponent);
        return negative ? SoftNumber::one() / raised : raised;
    }

    SoftNumber primary() {
        const char c = peek();
        const std::size_t start = pos_;
        if (c == '(') {
            ++pos_;
            SoftNumber inner = expr();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            double value = 0.0;
            auto [end, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
            if (ec != std::errc{} || !std::isfinite(value)) throw ParseError(start, "malformed number");
            pos_ = static_cast<std::size_t>(end - text_.data());
            if (acceptSoftUnit()) return SoftNumber{value, 0.0};
            return SoftNumber::fromReal(value);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            if (acceptSoftUnit()) return SoftNumber{1.0, 0.0};
            while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            const std::string_view name = text_.substr(start, pos_ - start);
            const auto fn = analyticByName(name);
            if (!fn) throw ParseError(start, "unknown function '" + std::string(name) + "'");
            expect('(');
            SoftNumber argument = expr();
            expect(')');
            return liftAnalytic(*fn, argument);
        }
        if (c == '\0') throw ParseError(pos_, "unexpected end of input");
        throw ParseError(pos_, "unexpected '" + std::string(1, c) + "'");
    }

    /// `z0` as a whole word, after optional blanks.
    bool acceptSoftUnit() {
        const std::size_t saved = pos_;
        skipBlanks();
        if (text_.substr(pos_, 2) == "z0" &&
            (pos_ + 2 == text_.size() || !std::isalnum(static_cast<unsigned char>(text_[pos_ + 2])))) {
            pos_ += 2;
            return true;
        }
        pos_ = saved;
        return false;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

SoftNumber evaluate(std::string_view expression) { return Evaluator(expression).run(); }

}  // namespace softnum
