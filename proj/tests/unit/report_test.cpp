#include <gtest/gtest.h>

#include <algorithm>

#include "vanet/metrics/report.hpp"
#include "vanet/sim/simulator.hpp"

using namespace vanet;
using metrics::Metric;

namespace {

metrics::RunResult short_run(std::int64_t vehicles, mac::Mode mode = mac::Mode::Baseline) {
    model::Scenario s = model::preset("scenario1");
    s.vehicle_count = vehicles;
    s.duration = 20.0;
    s.mode = mode;
    sim::Simulator sim(s);
    sim.run();
    return sim.result();
}

metrics::RunSummary with_sum(Metric m, double value) {
    metrics::RunSummary s;
    s.scenario = "x";
    s.nodes = 10;
    s.sums[static_cast<std::size_t>(m)] = value;
    s.means[static_cast<std::size_t>(m)] = value / 10;
    return s;
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST(Export, OneRowPerNode) {
    const auto csv = metrics::nodes_csv(short_run(44));
    EXPECT_EQ(count_lines(csv), 46u);
    EXPECT_EQ(csv.substr(0, csv.find('\n')),
              "nodeId,kind,timesIntoBackoff,slotsBackoff,macBusySeconds,phyBusySeconds,sentPackets,totalLostPackets,"
              "generatedWSM,generatedBSM,generatedWSA,receivedWSM,receivedBSM,receivedWSA,droppedByGate,posX,posY,"
              "channelIdleSeconds");
}

TEST(Export, EmptyWorld) {
    metrics::RunResult empty;
    empty.scenario = "none";
    const auto csv = metrics::nodes_csv(empty);
    EXPECT_EQ(count_lines(csv), 1u);
    const auto s = metrics::summarize(empty);
    for (double v : s.sums) EXPECT_EQ(v, 0.0);
    for (double v : s.means) EXPECT_EQ(v, 0.0);
    EXPECT_EQ(s.mean_idle_seconds, 0.0);
}

TEST(Export, ByteIdentical) {
    const auto r = short_run(10);
    EXPECT_EQ(metrics::nodes_csv(r), metrics::nodes_csv(r));
    EXPECT_EQ(metrics::to_json(metrics::summarize(r)).dump(2), metrics::to_json(metrics::summarize(short_run(10))).dump(2));
}

TEST(Export, RoundTripPreservesEveryValue) {
    const auto r = short_run(12);
    const auto back = metrics::parse_nodes_csv(metrics::nodes_csv(r), "mem");
    ASSERT_EQ(back.size(), r.nodes.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
        EXPECT_EQ(back[i].id, r.nodes[i].id);
        EXPECT_EQ(back[i].kind, r.nodes[i].kind);
        for (Metric m : metrics::kAllMetrics) EXPECT_EQ(back[i].ledger.get(m), r.nodes[i].ledger.get(m));
        EXPECT_EQ(back[i].x, r.nodes[i].x);
        EXPECT_EQ(back[i].y, r.nodes[i].y);
        EXPECT_EQ(back[i].idle_seconds, r.nodes[i].idle_seconds);
    }
}

TEST(Export, ImportErrorsNameTheLine) {
    try {
        metrics::parse_nodes_csv(metrics::nodes_csv(short_run(2)) + "9,vehicle,1\n", "t.csv");
        FAIL();
    } catch (const metrics::IoError& e) {
        EXPECT_NE(std::string(e.what()).find("t.csv:5"), std::string::npos) << e.what();
    }
    EXPECT_THROW(metrics::parse_nodes_csv("a,b\n", "t.csv"), metrics::IoError);
}

TEST(Export, SummaryJsonRoundTrip) {
    const auto s = metrics::summarize(short_run(8));
    const auto j = nlohmann::json::parse(metrics::to_json(s).dump());
    EXPECT_EQ(j["schema_version"], metrics::kSchemaVersion);
    EXPECT_EQ(metrics::summary_from_json(j, "mem"), s);
}

TEST(Export, WriteFailureNamesPath) {
    try {
        metrics::write_text("/proc/definitely/not/here.csv", "x");
        FAIL();
    } catch (const metrics::IoError& e) {
        EXPECT_NE(std::string(e.what()).find("/proc/definitely/not/here.csv"), std::string::npos);
    }
}

TEST(Compare, CollidedPacketsArithmetic) {
    const auto r = metrics::compare_runs(with_sum(Metric::TotalLostPackets, 1000), with_sum(Metric::TotalLostPackets, 20));
    EXPECT_NEAR(*r.figure("collidedPackets").total.change, 0.98, 1e-12);
    EXPECT_NEAR(*r.figure("collidedPackets").per_node.change, 0.98, 1e-12);
}

TEST(Compare, RedundantSentArithmetic) {
    const auto r = metrics::compare_runs(with_sum(Metric::SentPackets, 1000), with_sum(Metric::SentPackets, 815));
    EXPECT_NEAR(*r.figure("redundantSent").total.change, 0.185, 1e-12);
}

TEST(Compare, ZeroBaselineIsNotApplicable) {
    const auto r = metrics::compare_runs(with_sum(Metric::SentPackets, 0), with_sum(Metric::SentPackets, 5));
    EXPECT_FALSE(r.figure("redundantSent").total.change.has_value());
    const auto j = metrics::to_json(r);
    EXPECT_TRUE(j["figures"][1]["sum"]["change"].is_null());
}

TEST(Compare, SelfComparisonIsZero) {
    const auto s = metrics::summarize(short_run(10));
    const auto r = metrics::compare_runs(s, s);
    ASSERT_EQ(r.figures.size(), 4u);
    for (const auto& f : r.figures) {
        EXPECT_EQ(f.total.change.value_or(0.0), 0.0) << f.name;
        EXPECT_EQ(f.per_node.change.value_or(0.0), 0.0) << f.name;
    }
    for (const auto& [name, f] : r.metrics) EXPECT_EQ(f.total.change.value_or(0.0), 0.0) << name;
}

TEST(Compare, IdleIncreaseDirection) {
    metrics::RunSummary b = with_sum(Metric::SentPackets, 1), f = b;
    b.total_idle_seconds = 100;
    b.mean_idle_seconds = 10;
    f.total_idle_seconds = 195;
    f.mean_idle_seconds = 19.5;
    const auto r = metrics::compare_runs(b, f);
    EXPECT_NEAR(*r.figure("channelIdleTime").total.change, 0.95, 1e-12);
    EXPECT_EQ(r.figure("channelIdleTime").direction, "increase");
}

TEST(Compare, MismatchRejected) {
    auto a = with_sum(Metric::SentPackets, 1), b = a;
    b.seed = 9;
    EXPECT_THROW(metrics::compare_runs(a, b), metrics::ScenarioMismatch);
    b = a;
    b.nodes = 11;
    EXPECT_THROW(metrics::compare_runs(a, b), metrics::ScenarioMismatch);
}
