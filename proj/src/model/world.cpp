#include "vanet/model/world.hpp"

#include <algorithm>

namespace vanet::model {

const char* to_string(NodeKind kind) noexcept { return kind == NodeKind::Rsu ? "rsu" : "vehicle"; }

World build_scenario(const Scenario& scenario, sim::RngStreams& streams) {
    if (auto issues = validate(scenario, "scenario '" + scenario.name + "'"); !issues.empty()) {
        throw ConfigError(std::move(issues));
    }
    World w;
    w.scenario = scenario;
    const auto rsus = static_cast<std::uint32_t>(scenario.rsu_count);
    const auto vehicles = static_cast<std::uint32_t>(scenario.vehicle_count);

    for (std::uint32_t i = 0; i < rsus; ++i) {
        const Vec2 p{scenario.area_width * (i + 0.5) / rsus, scenario.area_height / 2.0};
        w.nodes.push_back({i, NodeKind::Rsu, p, p, 0.0});
    }
    for (std::uint32_t v = 0; v < vehicles; ++v) {
        const std::uint32_t id = rsus + v;
        auto& rng = streams.stream("placement", id);
        NodeSpec n;
        n.id = id;
        n.position = {rng.uniform(0.0, scenario.area_width), rng.uniform(0.0, scenario.area_height)};
        n.waypoint = {rng.uniform(0.0, scenario.area_width), rng.uniform(0.0, scenario.area_height)};
        n.speed = rng.uniform(scenario.speed_min, scenario.speed_max);
        w.nodes.push_back(n);
    }
    if (vehicles > 0) {
        auto& rng = streams.stream("accidents");
        for (std::int64_t k = 0; k < scenario.accidents; ++k) {
            const double t = rng.uniform(0.0, scenario.duration);
            const auto victim = static_cast<std::uint32_t>(rsus + rng.uniform_int(0, vehicles - 1));
            w.accidents.push_back({t, victim});
        }
        std::stable_sort(w.accidents.begin(), w.accidents.end(),
                         [](const AccidentEvent& a, const AccidentEvent& b) { return a.time < b.time; });
    }
    return w;
}

}  // namespace vanet::model
