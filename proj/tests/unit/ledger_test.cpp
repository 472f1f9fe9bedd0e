#include <gtest/gtest.h>

#include <cmath>

#include "vanet/metrics/ledger.hpp"

using namespace vanet::metrics;

TEST(Ledger, Accumulates) {
    MetricsLedger l;
    l.record(Metric::SlotsBackoff, 7);
    EXPECT_EQ(l.get(Metric::SlotsBackoff), 7.0);
    l.record(Metric::SlotsBackoff);
    EXPECT_EQ(l.get(Metric::SlotsBackoff), 8.0);
    l.record(Metric::MacBusySeconds, 13e-6);
    EXPECT_DOUBLE_EQ(l.get(Metric::MacBusySeconds), 13e-6);
}

TEST(Ledger, FrozenRejectsWrites) {
    MetricsLedger l;
    l.freeze();
    EXPECT_THROW(l.record(Metric::SentPackets), FrozenLedger);
    EXPECT_EQ(l.get(Metric::SentPackets), 0.0);
}

TEST(Ledger, RejectsBadAmounts) {
    MetricsLedger l;
    EXPECT_THROW(l.record(Metric::SentPackets, -1), std::invalid_argument);
    EXPECT_THROW(l.record(Metric::SentPackets, 0.5), std::invalid_argument);
    EXPECT_THROW(l.record(Metric::PhyBusySeconds, NAN), std::invalid_argument);
    EXPECT_NO_THROW(l.record(Metric::PhyBusySeconds, 0.5));
}

TEST(Ledger, ColumnOrder) {
    const char* expected[] = {"timesIntoBackoff", "slotsBackoff",  "macBusySeconds", "phyBusySeconds", "sentPackets",
                              "totalLostPackets", "generatedWSM",  "generatedBSM",   "generatedWSA",   "receivedWSM",
                              "receivedBSM",      "receivedWSA",   "droppedByGate"};
    for (std::size_t i = 0; i < kMetricCount; ++i) EXPECT_EQ(column_name(kAllMetrics[i]), expected[i]);
}
