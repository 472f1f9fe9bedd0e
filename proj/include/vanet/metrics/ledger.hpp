#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string_view>

namespace vanet::metrics {

/// Per-node quantities, in CSV column order.
enum class Metric : std::size_t {
    TimesIntoBackoff,
    SlotsBackoff,
    MacBusySeconds,
    PhyBusySeconds,
    SentPackets,
    TotalLostPackets,
    GeneratedWsm,
    GeneratedBsm,
    GeneratedWsa,
    ReceivedWsm,
    ReceivedBsm,
    ReceivedWsa,
    DroppedByGate,
};

inline constexpr std::size_t kMetricCount = 13;

inline constexpr std::array<Metric, kMetricCount> kAllMetrics{
    Metric::TimesIntoBackoff, Metric::SlotsBackoff, Metric::MacBusySeconds, Metric::PhyBusySeconds,
    Metric::SentPackets,      Metric::TotalLostPackets, Metric::GeneratedWsm, Metric::GeneratedBsm,
    Metric::GeneratedWsa,     Metric::ReceivedWsm,    Metric::ReceivedBsm,    Metric::ReceivedWsa,
    Metric::DroppedByGate,
};

std::string_view column_name(Metric m) noexcept;

/// Seconds-valued metrics; everything else is an integral count.
constexpr bool is_duration(Metric m) noexcept {
    return m == Metric::MacBusySeconds || m == Metric::PhyBusySeconds;
}

class FrozenLedger : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class MetricsLedger {
public:
    /// Adds `amount` to the metric. Rejects negative or non-finite amounts,
    /// fractional amounts for counters, and any write after freeze().
    void record(Metric m, double amount = 1.0);

    double get(Metric m) const noexcept { return values_[static_cast<std::size_t>(m)]; }

    void freeze() noexcept { frozen_ = true; }
    bool frozen() const noexcept { return frozen_; }

    bool operator==(const MetricsLedger&) const = default;

private:
    std::array<double, kMetricCount> values_{};
    bool frozen_ = false;
};

}  // namespace vanet::metrics
