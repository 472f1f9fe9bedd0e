#include "vanet/metrics/ledger.hpp"

#include <cmath>
#include <string>

namespace vanet::metrics {

std::string_view column_name(Metric m) noexcept {
    switch (m) {
        case Metric::TimesIntoBackoff: return "timesIntoBackoff";
        case Metric::SlotsBackoff: return "slotsBackoff";
        case Metric::MacBusySeconds: return "macBusySeconds";
        case Metric::PhyBusySeconds: return "phyBusySeconds";
        case Metric::SentPackets: return "sentPackets";
        case Metric::TotalLostPackets: return "totalLostPackets";
        case Metric::GeneratedWsm: return "generatedWSM";
        case Metric::GeneratedBsm: return "generatedBSM";
        case Metric::GeneratedWsa: return "generatedWSA";
        case Metric::ReceivedWsm: return "receivedWSM";
        case Metric::ReceivedBsm: return "receivedBSM";
        case Metric::ReceivedWsa: return "receivedWSA";
        case Metric::DroppedByGate: return "droppedByGate";
    }
    return "?";
}

void MetricsLedger::record(Metric m, double amount) {
    if (frozen_) throw FrozenLedger("ledger is frozen; cannot record " + std::string(column_name(m)));
    if (!std::isfinite(amount) || amount < 0.0) {
        throw std::invalid_argument("negative or non-finite amount for " + std::string(column_name(m)));
    }
    if (!is_duration(m) && amount != std::floor(amount)) {
        throw std::invalid_argument("fractional amount for counter " + std::string(column_name(m)));
    }
    values_[static_cast<std::size_t>(m)] += amount;
}

}  // namespace vanet::metrics
