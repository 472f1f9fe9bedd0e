#include "vanet/model/traffic.hpp"

#include <cmath>
#include <limits>

namespace vanet::model {

std::uint64_t periodic_count(double duration, double interval) {
    return static_cast<std::uint64_t>(std::floor(duration / interval));
}

double sample_gain(sim::RandomStream& rng, double a, double b) {
    const double u = rng.uniform01();
    if (a == 1.0 && b == 1.0) return u;
    return std::pow(1.0 - std::pow(1.0 - u, 1.0 / b), 1.0 / a);
}

void NeighborTable::record(std::uint32_t id, double time, double gain, Vec2 position) {
    entries_[id] = {time, gain, position};
}

std::optional<double> NeighborTable::nearest_gain(double now, Vec2 self) const {
    std::optional<double> best;
    double best_d = std::numeric_limits<double>::infinity();
    for (const auto& [id, e] : entries_) {
        if (now - e.heard > expiry_) continue;
        const double d = distance(self, e.position);
        if (d < best_d) {
            best_d = d;
            best = e.gain;
        }
    }
    return best;
}

std::size_t NeighborTable::live(double now) const {
    std::size_t n = 0;
    for (const auto& [id, e] : entries_) n += now - e.heard <= expiry_;
    return n;
}

}  // namespace vanet::model
