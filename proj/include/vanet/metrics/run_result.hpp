#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "vanet/metrics/ledger.hpp"

namespace vanet::metrics {

struct NodeResult {
    std::uint32_t id = 0;
    std::string kind;  // "vehicle" | "rsu"
    MetricsLedger ledger;
    double x = 0.0;
    double y = 0.0;
    double idle_seconds = 0.0;  // duration minus the union of MAC frozen slots and PHY busy time

    bool operator==(const NodeResult&) const = default;
};

inline constexpr std::size_t kFrameKinds = 4;     // WSM, BSM, WSA request, WSA response
inline constexpr std::size_t kRxOutcomes = 3;     // delivered, lost, below sensitivity

/// Run-wide tallies kept by the simulator alongside the per-node ledgers.
struct RunTotals {
    std::uint64_t frames_on_air = 0;
    std::array<std::uint64_t, kFrameKinds> started_by_kind{};
    std::array<std::uint64_t, kFrameKinds> completed_by_kind{};
    /// Receptions of completed frames, [kind][outcome]. Corrupted deliveries count as lost.
    std::array<std::array<std::uint64_t, kRxOutcomes>, kFrameKinds> receptions{};
    std::uint64_t collided_transmissions = 0;
    std::uint64_t corrupted_receptions = 0;
    std::array<std::uint64_t, kFrameKinds> origins_by_kind{};
    std::uint64_t rebroadcasts = 0;
    std::uint64_t events = 0;

    bool operator==(const RunTotals&) const = default;
};

struct RunResult {
    std::string scenario;
    std::uint64_t seed = 0;
    double duration = 0.0;
    std::string mode;
    std::string acceptance;
    std::vector<NodeResult> nodes;
    RunTotals totals;

    bool operator==(const RunResult&) const = default;
};

}  // namespace vanet::metrics
