#pragma once

#include <cstdint>
#include <vector>

#include "vanet/model/world.hpp"

namespace vanet::model {

/// Random waypoint over the scenario area, advanced in fixed ticks. Each tick
/// computes the position at the end of the tick; queries in between
/// interpolate linearly. RSUs never move.
class Mobility {
public:
    Mobility(const World& world, sim::RngStreams& streams);

    /// Advances every vehicle from `now` to `now + dt`. Ticks must be contiguous.
    void step(double now, double dt);

    Vec2 position(std::uint32_t id, double t) const;
    /// Current speed; zero while halted.
    double speed(std::uint32_t id, double t) const;
    bool halted(std::uint32_t id, double t) const { return t < nodes_.at(id).halted_until; }

    /// Stops the vehicle where it is at `t` until `until`.
    void halt(std::uint32_t id, double t, double until);

    std::size_t size() const noexcept { return nodes_.size(); }

private:
    struct State {
        bool vehicle;
        Vec2 from, to;
        double t0 = 0.0, t1 = 0.0;
        Vec2 waypoint;
        double speed = 0.0;
        double halted_until = -1.0;
        sim::RandomStream* rng = nullptr;
    };

    Vec2 advance(State& s, double dt);
    Vec2 clamp(Vec2 p) const noexcept;

    double width_, height_, speed_min_, speed_max_;
    std::vector<State> nodes_;
};

}  // namespace vanet::model
