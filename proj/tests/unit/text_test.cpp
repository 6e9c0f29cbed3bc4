#include "softnum/text.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "softnum/error.hpp"
#include "test_support.hpp"

namespace softnum {
namespace {

TEST(Text, CanonicalForm) {
    EXPECT_EQ(toString(SoftNumber(22, 15)), "22z0 + 15");
    EXPECT_EQ(toString(SoftNumber(1, 0.5)), "1z0 + 0.5");
    EXPECT_EQ(toString(SoftNumber(-0.5, -3)), "-0.5z0 - 3");
    EXPECT_EQ(toString(SoftNumber(0.3989422804014327, 0)), "0.3989422804z0 + 0");
    EXPECT_EQ(toString(SoftNumber(-0.0, -0.0)), "0z0 + 0");
    std::ostringstream os;
    os << SoftNumber(2, 3);
    EXPECT_EQ(os.str(), "2z0 + 3");
}

TEST(Text, ParsesCanonicalAndRelaxedForms) {
    EXPECT_EQ(parseSoftNumber("2z0 + 3"), SoftNumber(2, 3));
    EXPECT_EQ(parseSoftNumber("-0.5z0 + 1e3"), SoftNumber(-0.5, 1000));
    EXPECT_EQ(parseSoftNumber("3"), SoftNumber(0, 3));
    EXPECT_EQ(parseSoftNumber("2z0"), SoftNumber(2, 0));
    EXPECT_EQ(parseSoftNumber("  2 z0+3 "), SoftNumber(2, 3));
    EXPECT_EQ(parseSoftNumber("2z0 - 3"), SoftNumber(2, -3));
    EXPECT_EQ(parseSoftNumber("2z0 + -3"), SoftNumber(2, -3));
    EXPECT_EQ(parseSoftNumber("3 + 2z0"), SoftNumber(2, 3));
    EXPECT_EQ(parseSoftNumber("-z0"), SoftNumber(-1, 0));
}

TEST(Text, ReportsParseErrorPositions) {
    auto position = [](std::string_view text) -> std::size_t {
        try {
            parseSoftNumber(text);
        } catch (const ParseError& e) {
            return e.position();
        }
        return std::string_view::npos;
    };
    EXPECT_EQ(position(""), 0u);
    EXPECT_EQ(position("2z0 + "), 6u);
    EXPECT_EQ(position("2z0 * 3"), 4u);
    EXPECT_EQ(position("2z0 + 3z0"), 4u);
    EXPECT_EQ(position("abc"), 0u);
    EXPECT_EQ(position("1 + 2z0 x"), 8u);
}

TEST(TextProperties, PrintIsIdempotentOnCanonicalForms) {
    testing::SoftGen gen(21);
    for (int k = 0; k < 5000; ++k) {
        const auto p = gen.real(1e4);
        const std::string once = toString(p);
        ASSERT_EQ(toString(parseSoftNumber(once)), once);
        const std::string exact = toString(p, kRoundTripDigits);
        ASSERT_EQ(parseSoftNumber(exact), p) << exact;
    }
}

}  // namespace
}  // namespace softnum
