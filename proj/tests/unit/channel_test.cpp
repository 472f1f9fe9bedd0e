#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "collision_oracle.hpp"
#include "vanet/phy/channel.hpp"

using namespace vanet::phy;
using vanet::testing::oracle_outcomes;
using vanet::testing::oracle_union;

TEST(Propagation, InverseSquare) {
    const double near = received_power(0.1, 0.7, 0.3, 40.0, 5.89e9);
    const double far = received_power(0.1, 0.7, 0.3, 80.0, 5.89e9);
    EXPECT_DOUBLE_EQ(near / far, 4.0);
    EXPECT_EQ(received_power(0.1, 0.0, 1.0, 40.0, 5.89e9), 0.0);
}

TEST(Propagation, HundredMetres) {
    // lambda = c / 5.89 GHz = 0.050899 m; (lambda / (4 pi 100))^2 = 1.6406e-9
    EXPECT_NEAR(received_power(0.1, 1.0, 1.0, 100.0, 5.89e9), 1.6406e-10, 0.0005e-10);
}

TEST(Propagation, DistanceFloorAndExponent) {
    EXPECT_EQ(received_power(0.1, 1, 1, 0.0, 5.89e9), received_power(0.1, 1, 1, 1.0, 5.89e9));
    const double n3 = received_power(0.1, 1, 1, 10.0, 5.89e9, 3.0);
    EXPECT_NEAR(n3 * 10.0, received_power(0.1, 1, 1, 10.0, 5.89e9), 1e-20);
}

TEST(Propagation, DbmConversion) {
    EXPECT_DOUBLE_EQ(dbm_to_watts(30.0), 1.0);
    EXPECT_NEAR(dbm_to_watts(-89.0), 1.2589e-12, 1e-16);
    EXPECT_NEAR(watts_to_dbm(dbm_to_watts(-89.0)), -89.0, 1e-12);
}

TEST(Airtime, ExactQuotient) {
    EXPECT_EQ(frame_airtime(256, 6e6), 256.0 / 6e6);
    EXPECT_NEAR(frame_airtime(256, 6e6), 42.6667e-6, 1e-10);
    EXPECT_NEAR(frame_airtime(1024, 27e6), 37.9259e-6, 1e-10);
    EXPECT_THROW(frame_airtime(256, 0.0), std::invalid_argument);
    EXPECT_THROW(frame_airtime(0, 6e6), std::invalid_argument);
}

TEST(Reception, SingleFrameDelivered) {
    const Arrival a{1.0, 1.5, 1e-9};
    const auto r = resolve_reception(1e-10, std::span(&a, 1));
    EXPECT_EQ(r.outcomes[0], RxOutcome::Delivered);
    EXPECT_DOUBLE_EQ(r.phy_busy_seconds, 0.5);
}

TEST(Reception, AnyOverlapCollides) {
    const std::vector<Arrival> a{{0.0, 1.0, 1e-9}, {1.0 - 1e-9, 2.0, 1e-9}};
    const auto r = resolve_reception(1e-10, a);
    EXPECT_EQ(r.outcomes[0], RxOutcome::LostCollision);
    EXPECT_EQ(r.outcomes[1], RxOutcome::LostCollision);
}

TEST(Reception, TouchingIntervalsDoNotCollide) {
    const std::vector<Arrival> a{{0.0, 1.0, 1e-9}, {1.0, 2.0, 1e-9}};
    const auto r = resolve_reception(1e-10, a);
    EXPECT_EQ(r.outcomes[0], RxOutcome::Delivered);
    EXPECT_EQ(r.outcomes[1], RxOutcome::Delivered);
    EXPECT_DOUBLE_EQ(r.phy_busy_seconds, 2.0);
}

TEST(Reception, WeakFramesAreInvisible) {
    const std::vector<Arrival> a{{0.0, 1.0, 1e-9}, {0.5, 1.5, 1e-11}};
    const auto r = resolve_reception(1e-10, a);
    EXPECT_EQ(r.outcomes[0], RxOutcome::Delivered);
    EXPECT_EQ(r.outcomes[1], RxOutcome::BelowSensitivity);
    EXPECT_DOUBLE_EQ(r.phy_busy_seconds, 1.0);
}

TEST(Reception, HalfDuplex) {
    const std::vector<Arrival> a{{0.0, 1.0, 1e-9}, {2.0, 3.0, 1e-9}};
    const std::vector<Interval> tx{{0.5, 0.6}, {3.0, 4.0}};
    const auto r = resolve_reception(1e-10, a, tx);
    EXPECT_EQ(r.outcomes[0], RxOutcome::LostCollision);
    EXPECT_EQ(r.outcomes[1], RxOutcome::Delivered);
}

TEST(Reception, ArrivalDuringOwnTransmission) {
    ChannelState ch(1e-10);
    ch.begin_transmit(0.0, 1.0);
    ASSERT_TRUE(ch.begin_arrival(1, 0.5, 2.0, 1e-9));
    EXPECT_EQ(ch.end_arrival(1), RxOutcome::LostCollision);
    EXPECT_DOUBLE_EQ(ch.busy_until(), 2.0);
}

TEST(Reception, BusyTimeClippedAtHorizon) {
    ChannelState ch(1e-10, 10.0);
    ch.begin_arrival(1, 9.5, 11.0, 1e-9);
    EXPECT_DOUBLE_EQ(ch.phy_busy_seconds(), 0.5);
}

TEST(Reception, MatchesOracleOnRandomSchedules) {
    const double sens = 1e-10;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const auto s = vanet::testing::random_line_schedule(seed, sens);
        const auto got = resolve_reception(sens, s.arrivals, s.own_tx);
        EXPECT_EQ(got.outcomes, oracle_outcomes(sens, s.arrivals, s.own_tx)) << "seed " << seed;
        EXPECT_NEAR(got.phy_busy_seconds, oracle_union(sens, s.arrivals), 1e-12) << "seed " << seed;
    }
}

TEST(Reception, OrderIndependent) {
    const double sens = 1e-10;
    std::mt19937_64 rng(99);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto s = vanet::testing::random_line_schedule(seed, sens);
        const auto base = resolve_reception(sens, s.arrivals, s.own_tx);
        std::vector<std::size_t> perm(s.arrivals.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Arrival> shuffled;
        for (std::size_t i : perm) shuffled.push_back(s.arrivals[i]);
        const auto got = resolve_reception(sens, shuffled, s.own_tx);
        for (std::size_t k = 0; k < perm.size(); ++k) EXPECT_EQ(got.outcomes[k], base.outcomes[perm[k]]);
        EXPECT_NEAR(got.phy_busy_seconds, base.phy_busy_seconds, 1e-15);
    }
}
