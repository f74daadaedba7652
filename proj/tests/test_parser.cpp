#include <gtest/gtest.h>

#include "generators.hpp"
#include "vircurv/errors.hpp"
#include "vircurv/field_parser.hpp"

using namespace vircurv;

TEST(Parser, Examples) {
    TrigField expected;
    expected.add_term(f(1), Rational(1));
    expected.add_term(g(3), Rational(-1, 2));
    EXPECT_EQ(parse_field("cos(t) - 1/2*sin(3t)"), expected);
    EXPECT_EQ(parse_field("2"), TrigField::constant(Rational(2)));
    EXPECT_EQ(format_field(expected), "cos(1t) - 1/2*sin(3t)");
    EXPECT_EQ(format_field(TrigField()), "0");
    EXPECT_EQ(format_field(TrigField::constant(Rational(2))), "2");
}

TEST(Parser, WhitespaceAndRepeatedModes) {
    EXPECT_EQ(parse_field("  cos( 2 t )+cos(2t)  "), Rational(2) * TrigField::basis(f(2)));
    EXPECT_TRUE(parse_field("sin(4t) - sin(4t)").is_zero());
    EXPECT_EQ(parse_field("-3/4*cos(0t)"), TrigField::constant(Rational(-3, 4)));
}

namespace {

std::size_t error_offset(const std::string& text) {
    try {
        parse_field(text);
    } catch (const ParseError& e) {
        EXPECT_FALSE(e.expected().empty()) << text;
        return e.offset();
    }
    ADD_FAILURE() << "accepted '" << text << "'";
    return std::string::npos;
}

} // namespace

TEST(Parser, MalformedInputsCarryOffsets) {
    EXPECT_EQ(error_offset("tan(t)"), 0u);
    EXPECT_EQ(error_offset(""), 0u);
    EXPECT_EQ(error_offset("sin(0t)"), 4u);
    EXPECT_EQ(error_offset("cos(-2t)"), 4u);
    EXPECT_EQ(error_offset("cos(t) junk"), 7u);
    EXPECT_EQ(error_offset("1/0*cos(t)"), 2u);
    EXPECT_EQ(error_offset("cos(t"), 5u);
    EXPECT_EQ(error_offset("cos(t) +"), 8u);
    EXPECT_EQ(error_offset("3*"), 2u);
}

TEST(Parser, RoundTripOnGeneratedFields) {
    gen::Rng rng(2024);
    for (int i = 0; i < 1000; ++i) {
        const TrigField x = gen::field(rng, 100, 6, 0);
        EXPECT_EQ(parse_field(format_field(x)), x) << format_field(x);
    }
}

TEST(Parser, RandomBytesNeverEscapeAsOtherErrors) {
    gen::Rng rng(99);
    for (int i = 0; i < 5000; ++i) {
        const std::string s = gen::bytes(rng, 24);
        try {
            const TrigField x = parse_field(s);
            EXPECT_EQ(parse_field(format_field(x)), x);
        } catch (const ParseError& e) {
            EXPECT_LE(e.offset(), s.size());
        }
    }
}
