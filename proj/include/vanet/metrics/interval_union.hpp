#pragma once

#include <limits>
#include <queue>
#include <utility>
#include <vector>

namespace vanet::metrics {

/// Streaming measure of a union of intervals clipped to [lo, hi]. Intervals
/// may arrive out of start order by at most `lag`; older ones are merged and
/// released as later starts come in, so memory stays bounded.
class IntervalUnion {
public:
    explicit IntervalUnion(double lag = 0.0, double lo = 0.0, double hi = std::numeric_limits<double>::infinity())
        : lag_(lag), lo_(lo), hi_(hi) {}

    /// Throws std::logic_error if `start` is older than the lag allows.
    void add(double start, double end);

    /// Measure of everything added so far.
    double measure() const;

    void set_upper(double hi) noexcept { hi_ = hi; }

private:
    using Iv = std::pair<double, double>;

    void settle(const Iv& iv);
    static double run_length(double a, double b, double lo, double hi);

    double lag_, lo_, hi_;
    std::priority_queue<Iv, std::vector<Iv>, std::greater<>> pending_;
    double latest_start_ = -std::numeric_limits<double>::infinity();
    double watermark_ = -std::numeric_limits<double>::infinity();
    bool open_ = false;
    double run_lo_ = 0.0, run_hi_ = 0.0;
    double closed_ = 0.0;
};

}  // namespace vanet::metrics
