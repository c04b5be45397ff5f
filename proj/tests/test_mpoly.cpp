#include <gtest/gtest.h>

#include <random>

#include "okbody/mpoly.hpp"

using namespace okbody;

namespace {
const std::vector<std::string> UVW{"u", "v", "w"};
MPoly P(const std::string& s) { return MPoly::parse(s, UVW); }
} // namespace

TEST(MPoly, ParsePrintRoundTrip) {
    auto f = P("3*u^2*v - 1/2*w^4 + 7");
    EXPECT_EQ(f.str(), "3*u^2*v - 1/2*w^4 + 7");
    EXPECT_EQ(MPoly::parse(f.str(), UVW), f);
    EXPECT_EQ(P("u - u").str(), "0");
    EXPECT_EQ(P("-v^2 + 2*v^2"), P("v^2"));
    EXPECT_THROW(MPoly::parse("u + q", UVW), parse_error);
    EXPECT_THROW(MPoly::parse("", UVW), parse_error);
    EXPECT_THROW(MPoly::parse("u + + v", UVW), parse_error);
}

TEST(MPoly, ArithmeticAndDegrees) {
    auto f = P("u + v");
    auto g = P("u - v");
    EXPECT_EQ(f * g, P("u^2 - v^2"));
    EXPECT_EQ((f * f) - P("u^2 + 2*u*v + v^2"), MPoly(UVW));
    EXPECT_TRUE(P("u^2 + v*w").is_homogeneous());
    EXPECT_FALSE(P("u^2 + v").is_homogeneous());
    EXPECT_EQ(P("u^3*w - v").total_degree(), 4);
}

TEST(MPoly, ExactDivision) {
    auto q = P("v^2 - u*w");
    auto f = q * q * P("u + 3*w");
    auto quot = f.divided_by(q);
    ASSERT_TRUE(quot.has_value());
    EXPECT_EQ(*quot, q * P("u + 3*w"));
    EXPECT_FALSE(P("u^2").divided_by(q).has_value());
    EXPECT_FALSE((f + P("1")).divided_by(q).has_value());
}

TEST(MPoly, DivisorOrderConstructedAndRecovered) {
    auto q = P("v^2 - u*w");
    EXPECT_EQ(divisor_order(q.pow(3) * P("u"), q), 3);
    EXPECT_EQ(divisor_order(P("u^2"), q), 0);
    EXPECT_THROW(divisor_order(MPoly(UVW), q), validation_error);
    EXPECT_THROW(divisor_order(P("u"), P("5")), validation_error);
}

TEST(MPoly, DivisorOrderRandomProducts) {
    std::mt19937_64 rng(2023);
    std::uniform_int_distribution<int> coeff(-4, 4), expo(0, 2), kd(0, 5);
    auto q = P("v^2 - u*w");
    for (int round = 0; round < 20; ++round) {
        MPoly h(UVW);
        for (int i = 0; i < 4; ++i)
            h.add_term({expo(rng), expo(rng), expo(rng)}, Q(coeff(rng)));
        if (h.is_zero() || h.divided_by(q).has_value()) continue;
        int k = kd(rng);
        EXPECT_EQ(divisor_order(h * q.pow(k), q), k);
    }
}

TEST(MPoly, SubstituteAndEval) {
    std::vector<std::string> T{"t"};
    std::vector<MPoly> conic{MPoly::parse("1", T), MPoly::parse("t", T), MPoly::parse("t^2", T)};
    EXPECT_EQ(P("w^2").substitute(conic), MPoly::parse("t^4", T));
    EXPECT_EQ(P("v^2 - u*w").substitute(conic), MPoly(T));
    EXPECT_EQ(P("u*v + w").eval({Q(2), Q(3), Q(5)}), Q(11));
}

TEST(MPoly, DehomogenizeAndOrderAt) {
    auto f = P("u^2*v + u^3"); // chart u = 1: v + 1
    auto g = f.dehomogenize(0);
    EXPECT_EQ(g, MPoly::parse("v + 1", {"v", "w"}));
    std::vector<std::string> T{"t"};
    EXPECT_EQ(order_at(MPoly::parse("t^3 + t^5", T), Q(0)), 3);
    EXPECT_EQ(order_at(MPoly::parse("t^2 - 2*t + 1", T), Q(1)), 2);
    EXPECT_EQ(order_at(MPoly::parse("7", T), Q(0)), 0);
    EXPECT_THROW(order_at(MPoly(T), Q(0)), validation_error);
}
