#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "vanet/model/scenario.hpp"
#include "vanet/sim/rng.hpp"

namespace vanet::model {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const Vec2&) const = default;
};

inline double distance(Vec2 a, Vec2 b) noexcept { return std::hypot(a.x - b.x, a.y - b.y); }

enum class NodeKind : std::uint8_t { Vehicle, Rsu };

const char* to_string(NodeKind kind) noexcept;

struct NodeSpec {
    std::uint32_t id = 0;
    NodeKind kind = NodeKind::Vehicle;
    Vec2 position;
    Vec2 waypoint;
    double speed = 0.0;
};

struct AccidentEvent {
    double time = 0.0;
    std::uint32_t vehicle = 0;
};

/// Initial state of a run. RSUs take the lowest ids, vehicles follow.
struct World {
    Scenario scenario;
    std::vector<NodeSpec> nodes;
    std::vector<AccidentEvent> accidents;  // sorted by time

    std::uint32_t first_vehicle() const noexcept { return static_cast<std::uint32_t>(scenario.rsu_count); }
};

/// Places vehicles uniformly with uniform speeds, RSUs along the horizontal
/// center line, and draws accident times and victims. Throws ConfigError.
World build_scenario(const Scenario& scenario, sim::RngStreams& streams);

}  // namespace vanet::model
