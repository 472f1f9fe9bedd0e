#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_set>

#include "vanet/model/world.hpp"
#include "vanet/phy/channel.hpp"
#include "vanet/sim/rng.hpp"

namespace vanet::model {

/// Where a message came from. Every rebroadcast carries the same origin id.
struct MessageOrigin {
    std::uint32_t node = 0;
    double created = 0.0;
    phy::FrameKind kind = phy::FrameKind::Wsm;
};

/// Periodic messages per node over a run: floor(duration / interval).
std::uint64_t periodic_count(double duration, double interval);

/// Kumaraswamy(a, b) on [0, 1] by inversion; a = b = 1 is uniform.
double sample_gain(sim::RandomStream& rng, double a, double b);

/// Last-heard knowledge of nearby senders.
class NeighborTable {
public:
    explicit NeighborTable(double expiry) : expiry_(expiry) {}

    void record(std::uint32_t id, double time, double gain, Vec2 position);

    /// Gain of the closest entry heard within the expiry window (ties to the
    /// lower id), or nothing when no such entry exists.
    std::optional<double> nearest_gain(double now, Vec2 self) const;

    std::size_t live(double now) const;

private:
    struct Entry {
        double heard;
        double gain;
        Vec2 position;
    };

    double expiry_;
    std::map<std::uint32_t, Entry> entries_;
};

/// Origins a node has already seen; the first sighting triggers its one rebroadcast.
class OriginLog {
public:
    /// True the first time an origin is offered.
    bool first_sighting(std::uint64_t origin) { return seen_.insert(origin).second; }
    bool seen(std::uint64_t origin) const { return seen_.contains(origin); }

private:
    std::unordered_set<std::uint64_t> seen_;
};

}  // namespace vanet::model
