#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "vanet/metrics/run_result.hpp"

namespace vanet::metrics {

inline constexpr int kSchemaVersion = 1;

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ScenarioMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Per-node table: nodeId, kind, the ledger columns, posX, posY, channelIdleSeconds.
std::string nodes_csv(const RunResult& run);
std::vector<NodeResult> parse_nodes_csv(std::string_view text, const std::string& source);

struct RunSummary {
    std::string scenario;
    std::uint64_t seed = 0;
    double duration = 0.0;
    std::string mode;
    std::string acceptance;
    std::uint64_t nodes = 0;
    std::uint64_t vehicles = 0;
    std::array<double, kMetricCount> sums{};
    std::array<double, kMetricCount> means{};  // over all nodes; zero for an empty world
    double total_idle_seconds = 0.0;
    double mean_idle_seconds = 0.0;
    std::uint64_t frames_on_air = 0;
    std::uint64_t collided_transmissions = 0;
    std::uint64_t rebroadcasts = 0;
    std::array<std::uint64_t, kFrameKinds> origins{};
    std::uint64_t events = 0;

    double sum(Metric m) const noexcept { return sums[static_cast<std::size_t>(m)]; }
    double mean(Metric m) const noexcept { return means[static_cast<std::size_t>(m)]; }
    bool operator==(const RunSummary&) const = default;
};

RunSummary summarize(const RunResult& run);
nlohmann::ordered_json to_json(const RunSummary& s);
/// Throws IoError naming `source` on schema problems.
RunSummary summary_from_json(const nlohmann::json& j, const std::string& source);

/// Relative change between two runs; empty when the baseline is zero.
struct Delta {
    double baseline = 0.0;
    double fuzzy = 0.0;
    std::optional<double> change;
};

/// (baseline - fuzzy) / baseline
Delta reduction(double baseline, double fuzzy);
/// (fuzzy - baseline) / baseline
Delta increase(double baseline, double fuzzy);

struct Figure {
    std::string name;
    std::string direction;  // "reduction" | "increase"
    std::string definition;
    Delta total;     // sums over nodes
    Delta per_node;  // means over nodes
};

struct ComparisonReport {
    std::string scenario;
    std::uint64_t seed = 0;
    double duration = 0.0;
    std::vector<Figure> figures;  // collided packets, redundant sent, network overhead, channel idle time
    std::vector<std::pair<std::string, Figure>> metrics;  // raw reduction for every ledger column

    const Figure& figure(std::string_view name) const;
};

/// Throws ScenarioMismatch unless both runs share scenario, seed, duration and node count.
ComparisonReport compare_runs(const RunSummary& baseline, const RunSummary& fuzzy);
nlohmann::ordered_json to_json(const ComparisonReport& r);

/// Writes `text` to `path`, creating parent directories. Throws IoError with the path.
void write_text(const std::string& path, std::string_view text);
std::string read_text(const std::string& path);

}  // namespace vanet::metrics
