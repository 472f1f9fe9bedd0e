#include <gtest/gtest.h>

#include <random>

#include "vanet/fuzzy/membership.hpp"

using vanet::fuzzy::FisError;
using vanet::fuzzy::MembershipFunction;

TEST(Membership, TrianglePeak) {
    EXPECT_DOUBLE_EQ(MembershipFunction::triangle(0, 16.4, 32.8)(16.4), 1.0);
}

TEST(Membership, RampMidpoint) {
    EXPECT_DOUBLE_EQ(MembershipFunction::ramp_up(0.1, 0.9)(0.5), 0.5);
}

TEST(Membership, TrapezoidFlatTop) {
    EXPECT_DOUBLE_EQ(MembershipFunction::trapezoid(10, 14.07, 18.13, 22.2)(16), 1.0);
}

TEST(Membership, OutsideSupportIsZero) {
    EXPECT_EQ(MembershipFunction::triangle(0, 16.4, 32.8)(40), 0.0);
    EXPECT_EQ(MembershipFunction::triangle(0, 16.4, 32.8)(-1), 0.0);
    EXPECT_EQ(MembershipFunction::ramp_up(0.1, 0.9)(0.05), 0.0);
    EXPECT_EQ(MembershipFunction::ramp_up(0.1, 0.9)(5.0), 1.0);
}

TEST(Membership, Shoulders) {
    const auto left = MembershipFunction::triangle(0, 0, 8.3);
    EXPECT_EQ(left(0.0), 1.0);
    EXPECT_NEAR(left(4.15), 0.5, 1e-15);
    const auto right = MembershipFunction::trapezoid(13, 17.93, 27.78, 27.78);
    EXPECT_EQ(right(27.78), 1.0);
    EXPECT_EQ(right(27.79), 0.0);
}

TEST(Membership, RejectsMalformedThresholds) {
    EXPECT_THROW(MembershipFunction::ramp_up(0.9, 0.1), FisError);
    EXPECT_THROW(MembershipFunction::ramp_up(0.5, 0.5), FisError);
    EXPECT_THROW(MembershipFunction::triangle(1, 0, 2), FisError);
    EXPECT_THROW(MembershipFunction::triangle(1, 1, 1), FisError);
    EXPECT_THROW(MembershipFunction::trapezoid(0, 2, 1, 3), FisError);
    EXPECT_THROW(MembershipFunction::trapezoid(2, 2, 2, 2), FisError);
    EXPECT_THROW(MembershipFunction::triangle(0, std::nan(""), 1), FisError);
}

TEST(Membership, PeakIsCoreMidpoint) {
    EXPECT_DOUBLE_EQ(MembershipFunction::triangle(5, 8.05, 11.1).peak(), 8.05);
    EXPECT_DOUBLE_EQ(MembershipFunction::trapezoid(10, 12, 16, 22).peak(), 14.0);
    EXPECT_DOUBLE_EQ(MembershipFunction::triangle(0.5, 1, 1).peak(), 1.0);
}

// Values stay in [0, 1]; inside each linear piece the finite-difference slope is
// constant, and the function is continuous across the breakpoints.
TEST(Membership, BoundedContinuousPiecewiseLinear) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> coord(-50.0, 50.0);
    for (int trial = 0; trial < 200; ++trial) {
        std::array<double, 4> p{coord(rng), coord(rng), coord(rng), coord(rng)};
        std::sort(p.begin(), p.end());
        if (p[3] - p[0] < 1e-3) continue;
        const auto mf = MembershipFunction::trapezoid(p[0], p[1], p[2], p[3]);
        for (int i = 0; i <= 2000; ++i) {
            const double x = -60.0 + 120.0 * i / 2000.0;
            const double y = mf(x);
            ASSERT_GE(y, 0.0);
            ASSERT_LE(y, 1.0);
        }
        const double knots[] = {-60.0, p[0], p[1], p[2], p[3], 60.0};
        for (int seg = 0; seg < 5; ++seg) {
            const double a = knots[seg], b = knots[seg + 1];
            if (b - a < 1e-6) continue;
            const double h = (b - a) / 8.0;
            const double s0 = (mf(a + 2 * h) - mf(a + h)) / h;
            for (int k = 2; k < 7; ++k) {
                const double s = (mf(a + (k + 1) * h) - mf(a + k * h)) / h;
                ASSERT_NEAR(s, s0, 1e-6 * (1.0 + std::abs(s0)));
            }
        }
        for (double k : {p[0], p[1], p[2], p[3]}) {
            // continuity: one-sided limits agree, except at shoulders where the
            // closed edge is the defining value
            const double eps = 1e-9;
            if (k == p[0] && p[0] == p[1]) continue;
            if (k == p[3] && p[2] == p[3]) continue;
            EXPECT_NEAR(mf(k - eps), mf(k + eps), 1e-6);
        }
    }
}
