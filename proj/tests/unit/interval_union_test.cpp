#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "vanet/metrics/interval_union.hpp"

using vanet::metrics::IntervalUnion;

namespace {

double brute_measure(std::vector<std::pair<double, double>> iv, double lo, double hi) {
    std::sort(iv.begin(), iv.end());
    double total = 0.0, a = 0.0, b = 0.0;
    bool open = false;
    for (auto [s, e] : iv) {
        s = std::max(s, lo);
        e = std::min(e, hi);
        if (e <= s) continue;
        if (open && s <= b) {
            b = std::max(b, e);
            continue;
        }
        if (open) total += b - a;
        a = s;
        b = e;
        open = true;
    }
    return open ? total + (b - a) : total;
}

}  // namespace

TEST(IntervalUnion, MatchesBruteForceWithBoundedDisorder) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> jitter(0.0, 1.0), len(0.0, 3.0);
    for (int trial = 0; trial < 200; ++trial) {
        IntervalUnion u(1.0, 0.0, 50.0);
        std::vector<std::pair<double, double>> all;
        double t = -2.0;
        for (int i = 0; i < 100; ++i) {
            t += jitter(rng) * 0.6;
            const double s = t - jitter(rng);  // at most 1.0 behind the newest start
            const double e = s + len(rng);
            u.add(s, e);
            all.emplace_back(s, e);
        }
        EXPECT_NEAR(u.measure(), brute_measure(all, 0.0, 50.0), 1e-9);
    }
}

TEST(IntervalUnion, RejectsTooLateIntervals) {
    IntervalUnion u(0.5);
    u.add(0.0, 1.0);
    u.add(5.0, 6.0);
    EXPECT_NO_THROW(u.add(1.0, 2.0));  // still ahead of everything already merged
    u.add(7.0, 8.0);
    EXPECT_THROW(u.add(4.0, 4.5), std::logic_error);
    EXPECT_DOUBLE_EQ(u.measure(), 4.0);
}

TEST(IntervalUnion, EmptyAndDegenerate) {
    IntervalUnion u;
    EXPECT_EQ(u.measure(), 0.0);
    u.add(1.0, 1.0);
    EXPECT_EQ(u.measure(), 0.0);
}
