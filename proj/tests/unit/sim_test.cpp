#include <gtest/gtest.h>

#include <sstream>

#include "vanet/sim/event_queue.hpp"
#include "vanet/sim/simulator.hpp"

using namespace vanet;
using metrics::Metric;
using sim::EventKind;
using sim::EventQueue;

namespace {

model::Scenario small(std::int64_t vehicles, double duration) {
    model::Scenario s = model::preset("scenario1");
    s.vehicle_count = vehicles;
    s.duration = duration;
    return s;
}

double total(const metrics::RunResult& r, Metric m) {
    double t = 0.0;
    for (const auto& n : r.nodes) t += n.ledger.get(m);
    return t;
}

}  // namespace

TEST(EventQueue, TimeThenInsertionOrder) {
    EventQueue q;
    q.schedule(2.0, EventKind::BeaconDue, 1);
    q.schedule(1.0, EventKind::BeaconDue, 2);
    q.schedule(1.0, EventKind::WsaDue, 3);
    q.schedule(1.0, EventKind::SlotTick, 4);
    EXPECT_EQ(q.pop().node, 2u);
    EXPECT_EQ(q.pop().node, 3u);
    EXPECT_EQ(q.pop().node, 4u);
    EXPECT_EQ(q.now(), 1.0);
    q.schedule(1.0, EventKind::FrameEnd, 5);
    EXPECT_EQ(q.pop().node, 5u);
    EXPECT_EQ(q.pop().node, 1u);
    EXPECT_TRUE(q.empty());
}

TEST(EventQueue, RejectsPastEvents) {
    EventQueue q;
    q.schedule(3.0, EventKind::BeaconDue);
    q.pop();
    EXPECT_THROW(q.schedule(2.999, EventKind::BeaconDue), sim::PastEvent);
    EXPECT_NO_THROW(q.schedule(3.0, EventKind::BeaconDue));
}

TEST(Simulator, ZeroHorizonDoesNothing) {
    sim::Simulator s(model::preset("scenario1"));
    s.run_until(0.0);
    const auto r = s.result();
    EXPECT_EQ(r.totals.events, 0u);
    for (const auto& n : r.nodes) {
        for (Metric m : metrics::kAllMetrics) EXPECT_EQ(n.ledger.get(m), 0.0);
        EXPECT_TRUE(n.ledger.frozen());
    }
    EXPECT_THROW(s.run_until(1.0), std::logic_error);
}

TEST(Simulator, SingleNodeBeacons) {
    model::Scenario sc = small(1, 200.0);
    sc.rsu_count = 0;
    sim::Simulator s(sc);
    s.run();
    const auto r = s.result();
    ASSERT_EQ(r.nodes.size(), 1u);
    const auto& l = r.nodes[0].ledger;
    EXPECT_EQ(l.get(Metric::GeneratedWsm), 200.0);
    EXPECT_EQ(l.get(Metric::TotalLostPackets), 0.0);
    EXPECT_EQ(l.get(Metric::PhyBusySeconds), 0.0);
    // No receivers: only partition of the horizon into frozen slots and idle time.
    EXPECT_NEAR(l.get(Metric::MacBusySeconds) + r.nodes[0].idle_seconds, 200.0, 1e-9);
}

TEST(Simulator, LoneBeaconerNeverBacksOff) {
    model::Scenario sc = small(1, 200.0);
    sc.rsu_count = 0;
    sc.accidents = 0;
    sc.p_wsa = 0.0;
    std::ostringstream trace;
    sim::Simulator s(sc, nullptr, &trace);
    s.run();
    const auto& l = s.ledger(0);
    EXPECT_EQ(l.get(Metric::SentPackets), 200.0);
    EXPECT_EQ(l.get(Metric::TimesIntoBackoff), 0.0);
    EXPECT_EQ(l.get(Metric::MacBusySeconds), 0.0);

    // Each frame goes on air exactly one AIFS after its beacon fired.
    std::istringstream in(trace.str());
    std::string line;
    double due = -1.0;
    int checked = 0;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        double t;
        std::string kind;
        ls >> t >> kind;
        if (kind == "BeaconDue") due = t;
        if (kind == "FrameStart") {
            EXPECT_NEAR(t - due, sc.aifs, 1e-12);
            ++checked;
        }
    }
    EXPECT_EQ(checked, 200);
}

TEST(Simulator, SameSeedSameLedgers) {
    const model::Scenario sc = small(12, 40.0);
    sim::Simulator a(sc), b(sc);
    a.run();
    b.run();
    EXPECT_EQ(a.result(), b.result());
}

TEST(Simulator, SeedChangesOutcome) {
    model::Scenario sc = small(12, 40.0);
    sim::Simulator a(sc);
    sc.seed += 1;
    sim::Simulator b(sc);
    a.run();
    b.run();
    EXPECT_NE(a.result(), b.result());
}

TEST(Simulator, EmptyWorldHasNoVehicleTraffic) {
    sim::Simulator s(small(0, 50.0));
    s.run();
    const auto r = s.result();
    ASSERT_EQ(r.nodes.size(), 1u);
    EXPECT_EQ(r.totals.frames_on_air, 0u);
    for (Metric m : metrics::kAllMetrics) EXPECT_EQ(r.nodes[0].ledger.get(m), 0.0);
}

TEST(Simulator, ReceptionConservation) {
    for (mac::Mode mode : {mac::Mode::Baseline, mac::Mode::Fuzzy}) {
        model::Scenario sc = small(15, 30.0);
        sc.mode = mode;
        sc.speed_max = 22.2;
        sc.area_width = 400.0;  // some links fall below sensitivity
        sc.area_height = 400.0;
        sc.acceptance = model::Acceptance::Bad;
        sim::Simulator s(sc);
        s.run();
        const auto r = s.result();
        const auto& t = r.totals;
        std::uint64_t lost = 0, delivered = 0, below = 0;
        for (std::size_t k = 0; k < metrics::kFrameKinds; ++k) {
            const auto& rx = t.receptions[k];
            EXPECT_EQ(rx[0] + rx[1] + rx[2], t.completed_by_kind[k] * (r.nodes.size() - 1)) << "kind " << k;
            delivered += rx[0];
            lost += rx[1];
            below += rx[2];
        }
        EXPECT_GT(below, 0u);
        EXPECT_EQ(static_cast<double>(lost), total(r, Metric::TotalLostPackets));
        EXPECT_EQ(static_cast<double>(delivered), total(r, Metric::ReceivedWsm) + total(r, Metric::ReceivedBsm) +
                                                      total(r, Metric::ReceivedWsa));
        EXPECT_EQ(static_cast<double>(t.frames_on_air), total(r, Metric::SentPackets));
    }
}

TEST(Simulator, LedgerInvariants) {
    for (mac::Mode mode : {mac::Mode::Baseline, mac::Mode::Fuzzy}) {
        model::Scenario sc = small(20, 60.0);
        sc.mode = mode;
        sc.speed_max = 22.2;
        sc.acceptance = model::Acceptance::Bad;
        sim::Simulator s(sc);
        s.run();
        EXPECT_LE(s.max_rebroadcasts_per_origin(), 1u);
        for (const auto& n : s.result().nodes) {
            const auto& l = n.ledger;
            EXPECT_GE(l.get(Metric::SentPackets), l.get(Metric::GeneratedWsm) + l.get(Metric::GeneratedBsm) +
                                                      l.get(Metric::GeneratedWsa) - l.get(Metric::DroppedByGate) - 1)
                << "node " << n.id;  // one frame may still be queued at the horizon
            EXPECT_LE(l.get(Metric::PhyBusySeconds), 60.0);
            EXPECT_LE(l.get(Metric::MacBusySeconds), 60.0);
            EXPECT_GE(n.idle_seconds, 0.0);
            EXPECT_LE(n.idle_seconds, 60.0 - std::max(l.get(Metric::PhyBusySeconds), 0.0) + 1e-9);
        }
    }
}

TEST(Simulator, AccidentVehicleHalts) {
    const model::Scenario sc = small(10, 200.0);
    sim::Simulator s(sc);
    const auto acc = s.world().accidents.at(0);
    s.run_until(acc.time + 5.0);
    EXPECT_EQ(s.mobility().speed(acc.vehicle, acc.time + 4.9), 0.0);
    EXPECT_TRUE(s.mobility().halted(acc.vehicle, acc.time + 4.9));
    EXPECT_EQ(s.ledger(acc.vehicle).get(Metric::GeneratedBsm), 1.0);
}

TEST(Simulator, TenBsmOrigins) {
    sim::Simulator s(model::preset("scenario1"));
    s.run();
    EXPECT_EQ(s.totals().origins_by_kind[1], 10u);
    EXPECT_EQ(total(s.result(), Metric::GeneratedBsm), 10.0);
}

TEST(Simulator, NoWsaWhenDisabled) {
    model::Scenario sc = small(10, 50.0);
    sc.p_wsa = 0.0;
    sim::Simulator s(sc);
    s.run();
    const auto r = s.result();
    EXPECT_EQ(total(r, Metric::GeneratedWsa), 0.0);
    EXPECT_EQ(total(r, Metric::ReceivedWsa), 0.0);
}

TEST(Reception, DuplicateBsmRebroadcastOnce) {
    sim::Simulator s(small(3, 10.0));
    phy::Frame f;
    f.kind = phy::FrameKind::Bsm;
    f.bits = 1024;
    f.sender = 2;
    f.origin_id = 12345;
    s.handle_reception(1, f);
    s.handle_reception(1, f);
    EXPECT_EQ(s.ledger(1).get(Metric::ReceivedBsm), 2.0);
    EXPECT_EQ(s.mac(1).queue_size(), 1u);
    EXPECT_EQ(s.max_rebroadcasts_per_origin(), 1u);
}

TEST(Reception, WsmIsNotRebroadcast) {
    sim::Simulator s(small(3, 10.0));
    phy::Frame f;
    f.kind = phy::FrameKind::Wsm;
    f.bits = 256;
    f.sender = 2;
    s.handle_reception(1, f);
    EXPECT_EQ(s.ledger(1).get(Metric::ReceivedWsm), 1.0);
    EXPECT_EQ(s.mac(1).queue_size(), 0u);
}

TEST(Reception, RsuAnswersRequestOnce) {
    sim::Simulator s(small(3, 10.0));
    phy::Frame f;
    f.kind = phy::FrameKind::WsaRequest;
    f.bits = 256;
    f.sender = 2;
    f.origin_id = 77;
    s.handle_reception(0, f);
    s.handle_reception(0, f);
    EXPECT_EQ(s.ledger(0).get(Metric::ReceivedWsa), 2.0);
    EXPECT_EQ(s.ledger(0).get(Metric::GeneratedWsa), 1.0);
    EXPECT_EQ(s.mac(0).queue_size(), 1u);
    EXPECT_EQ(s.mac(0).head().kind, phy::FrameKind::WsaResponse);
}

TEST(Reception, NeighborTableFeedsTheGate) {
    sim::Simulator s(small(3, 10.0));
    EXPECT_EQ(s.status_of(1).receiver_gain, 0.5);
    phy::Frame f;
    f.kind = phy::FrameKind::Wsm;
    f.bits = 256;
    f.sender = 2;
    f.sender_gain = 0.83;
    s.handle_reception(1, f);
    EXPECT_EQ(s.status_of(1).receiver_gain, 0.83);
}

TEST(Simulator, FuzzyModeDropsAtTheGate) {
    model::Scenario sc = small(10, 30.0);
    sc.mode = mac::Mode::Fuzzy;
    sim::Simulator s(sc);
    s.run();
    const auto r = s.result();
    // Scenario-1 speeds never leave the Bad-consequent rules, so Good acceptance defers everything.
    EXPECT_EQ(total(r, Metric::SentPackets), 0.0);
    EXPECT_EQ(total(r, Metric::DroppedByGate),
              total(r, Metric::GeneratedWsm) + total(r, Metric::GeneratedBsm) + total(r, Metric::GeneratedWsa));
}
