#include "vanet/model/mobility.hpp"

#include <algorithm>

namespace vanet::model {

Mobility::Mobility(const World& world, sim::RngStreams& streams)
    : width_(world.scenario.area_width),
      height_(world.scenario.area_height),
      speed_min_(world.scenario.speed_min),
      speed_max_(world.scenario.speed_max) {
    nodes_.reserve(world.nodes.size());
    for (const NodeSpec& n : world.nodes) {
        State s;
        s.vehicle = n.kind == NodeKind::Vehicle;
        s.from = s.to = n.position;
        s.waypoint = n.waypoint;
        s.speed = s.vehicle ? n.speed : 0.0;
        if (s.vehicle) s.rng = &streams.stream("mobility", n.id);
        nodes_.push_back(s);
    }
}

Vec2 Mobility::clamp(Vec2 p) const noexcept { return {std::clamp(p.x, 0.0, width_), std::clamp(p.y, 0.0, height_)}; }

Vec2 Mobility::advance(State& s, double dt) {
    Vec2 p = s.from;
    double left = dt;
    for (int legs = 0; legs < 64 && left > 0.0 && s.speed > 0.0; ++legs) {
        const double d = distance(p, s.waypoint);
        const double reach = s.speed * left;
        if (d > reach) {
            p.x += (s.waypoint.x - p.x) * (reach / d);
            p.y += (s.waypoint.y - p.y) * (reach / d);
            break;
        }
        p = s.waypoint;
        left -= d / s.speed;
        s.waypoint = {s.rng->uniform(0.0, width_), s.rng->uniform(0.0, height_)};
        s.speed = s.rng->uniform(speed_min_, speed_max_);
    }
    return clamp(p);
}

void Mobility::step(double now, double dt) {
    for (State& s : nodes_) {
        if (!s.vehicle) continue;
        s.from = s.to;
        s.t0 = now;
        s.t1 = now + dt;
        s.to = now < s.halted_until ? s.from : advance(s, dt);
    }
}

Vec2 Mobility::position(std::uint32_t id, double t) const {
    const State& s = nodes_.at(id);
    if (!(s.t1 > s.t0) || t >= s.t1) return s.to;
    if (t <= s.t0) return s.from;
    const double a = (t - s.t0) / (s.t1 - s.t0);
    return {s.from.x + (s.to.x - s.from.x) * a, s.from.y + (s.to.y - s.from.y) * a};
}

double Mobility::speed(std::uint32_t id, double t) const {
    const State& s = nodes_.at(id);
    return t < s.halted_until ? 0.0 : s.speed;
}

void Mobility::halt(std::uint32_t id, double t, double until) {
    State& s = nodes_.at(id);
    if (!s.vehicle) return;
    const Vec2 here = position(id, t);
    s.from = s.to = here;
    s.t0 = t;
    s.halted_until = std::max(s.halted_until, until);
}

}  // namespace vanet::model
