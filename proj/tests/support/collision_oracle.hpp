#pragma once

// Reference reception model for tests: pairwise interval overlap and a sorted
// merge for the busy-time union. Shares no code with the simulator.

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "vanet/phy/channel.hpp"

namespace vanet::testing {

inline bool overlaps(double a0, double a1, double b0, double b1) { return std::min(a1, b1) > std::max(a0, b0); }

inline std::vector<phy::RxOutcome> oracle_outcomes(double sensitivity, const std::vector<phy::Arrival>& arrivals,
                                                   const std::vector<phy::Interval>& own_tx = {}) {
    std::vector<phy::RxOutcome> out(arrivals.size(), phy::RxOutcome::BelowSensitivity);
    for (std::size_t i = 0; i < arrivals.size(); ++i) {
        const auto& a = arrivals[i];
        if (a.power < sensitivity) continue;
        bool hit = false;
        for (std::size_t j = 0; j < arrivals.size() && !hit; ++j) {
            const auto& b = arrivals[j];
            hit = j != i && b.power >= sensitivity && overlaps(a.start, a.end, b.start, b.end);
        }
        for (const auto& t : own_tx) hit = hit || overlaps(a.start, a.end, t.start, t.end);
        out[i] = hit ? phy::RxOutcome::LostCollision : phy::RxOutcome::Delivered;
    }
    return out;
}

inline double oracle_union(double sensitivity, const std::vector<phy::Arrival>& arrivals) {
    std::vector<std::pair<double, double>> iv;
    for (const auto& a : arrivals) {
        if (a.power >= sensitivity) iv.emplace_back(a.start, a.end);
    }
    std::sort(iv.begin(), iv.end());
    double total = 0.0, lo = 0.0, hi = 0.0;
    bool open = false;
    for (const auto& [s, e] : iv) {
        if (open && s <= hi) {
            hi = std::max(hi, e);
            continue;
        }
        if (open) total += hi - lo;
        lo = s;
        hi = e;
        open = true;
    }
    if (open) total += hi - lo;
    return total;
}

/// Schedule seen by one receiver of a small line network: every other node
/// sends a few frames on a coarse time grid, so exact ties and touching
/// intervals occur often. Powers follow the inverse-square law.
struct Schedule {
    std::vector<phy::Arrival> arrivals;
    std::vector<phy::Interval> own_tx;
};

inline Schedule random_line_schedule(std::uint64_t seed, double sensitivity) {
    std::mt19937_64 rng(seed);
    const int nodes = 3 + static_cast<int>(rng() % 3);
    const int receiver = static_cast<int>(rng() % nodes);
    Schedule s;
    for (int n = 0; n < nodes; ++n) {
        const int frames = 1 + static_cast<int>(rng() % 3);
        for (int f = 0; f < frames; ++f) {
            const double start = static_cast<double>(rng() % 40) * 1e-5;
            const double len = static_cast<double>(1 + rng() % 6) * 1e-5;
            if (n == receiver) {
                s.own_tx.push_back({start, start + len});
                continue;
            }
            const double d = 50.0 * std::abs(n - receiver);
            // Distances 50..200 m; the threshold sits between 100 m and 150 m.
            s.arrivals.push_back({start, start + len, sensitivity * (125.0 * 125.0) / (d * d)});
        }
    }
    return s;
}

}  // namespace vanet::testing
