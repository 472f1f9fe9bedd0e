#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <unordered_map>
#include <vector>

#include "vanet/fuzzy/engine.hpp"
#include "vanet/mac/edca.hpp"
#include "vanet/metrics/interval_union.hpp"
#include "vanet/metrics/run_result.hpp"
#include "vanet/model/mobility.hpp"
#include "vanet/model/traffic.hpp"
#include "vanet/model/world.hpp"
#include "vanet/phy/channel.hpp"
#include "vanet/sim/event_queue.hpp"
#include "vanet/sim/rng.hpp"

namespace vanet::sim {

/// One isolated run of the network. Single-threaded; two Simulators share
/// nothing but the (immutable) gate.
class Simulator {
public:
    /// In Fuzzy mode a null gate means the built-in definition. Throws
    /// model::ConfigError for invalid scenarios. `trace` gets one line per event.
    Simulator(const model::Scenario& scenario, std::shared_ptr<const fuzzy::Fis> gate = nullptr,
              std::ostream* trace = nullptr);
    ~Simulator();

    Simulator(const Simulator&) = delete;
    Simulator& operator=(const Simulator&) = delete;

    /// Processes every event strictly before `t_end`, then freezes all ledgers.
    /// May be called once.
    void run_until(double t_end);
    void run() { run_until(world_.scenario.duration); }
    bool finished() const noexcept { return finished_; }

    metrics::RunResult result() const;

    const model::World& world() const noexcept { return world_; }
    const model::Mobility& mobility() const noexcept { return mobility_; }
    double now() const noexcept { return queue_.now(); }
    std::size_t node_count() const noexcept { return nodes_.size(); }
    const metrics::MetricsLedger& ledger(std::uint32_t id) const;
    const mac::Mac& mac(std::uint32_t id) const;
    const metrics::RunTotals& totals() const noexcept { return totals_; }

    /// Gate inputs the node would use right now.
    mac::VehicleStatus status_of(std::uint32_t id) const;

    /// Delivery path for a frame that reached `id` intact; public so the
    /// reception policy can be exercised directly.
    void handle_reception(std::uint32_t id, const phy::Frame& frame);

    /// Largest number of rebroadcasts any node made of a single origin.
    std::uint32_t max_rebroadcasts_per_origin() const;

private:
    struct Node;
    struct ActiveFrame {
        phy::Frame frame;
        std::vector<std::uint32_t> receivers;  // above sensitivity, ascending id
        std::uint64_t below = 0;
    };

    void dispatch(const SimEvent& e);
    void on_beacon(std::uint32_t id, std::uint64_t k);
    void on_wsa(std::uint32_t id, std::uint64_t k);
    void on_accident(std::uint64_t index);
    void on_slot(std::uint64_t k);
    void on_aifs(std::uint32_t id);
    void on_frame_end(std::uint32_t sender, std::uint64_t frame_id);

    phy::Frame new_message(std::uint32_t id, phy::FrameKind kind, std::int64_t bits);
    void submit(std::uint32_t id, const phy::Frame& frame);
    void rebroadcast(std::uint32_t id, const phy::Frame& frame);
    void start_access(std::uint32_t id);
    void start_transmission(std::uint32_t id);
    void ensure_slot_tick();

    RngStreams streams_;
    model::World world_;
    model::Mobility mobility_;
    std::shared_ptr<const fuzzy::Fis> gate_;
    std::ostream* trace_;
    EventQueue queue_;
    std::vector<std::unique_ptr<Node>> nodes_;
    std::vector<model::MessageOrigin> origins_;
    std::unordered_map<std::uint64_t, ActiveFrame> on_air_;
    std::map<std::pair<std::uint32_t, std::uint64_t>, std::uint32_t> rebroadcast_counts_;
    metrics::RunTotals totals_;
    std::uint64_t next_frame_id_ = 0;
    bool slot_tick_pending_ = false;
    bool finished_ = false;
    double t_end_ = 0.0;
};

}  // namespace vanet::sim
