#include "vanet/phy/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <tuple>

namespace vanet::phy {

const char* to_string(FrameKind kind) noexcept {
    switch (kind) {
        case FrameKind::Wsm: return "WSM";
        case FrameKind::Bsm: return "BSM";
        case FrameKind::WsaRequest: return "WSA-request";
        case FrameKind::WsaResponse: return "WSA-response";
    }
    return "?";
}

const char* to_string(RxOutcome outcome) noexcept {
    switch (outcome) {
        case RxOutcome::Delivered: return "delivered";
        case RxOutcome::LostCollision: return "lost-collision";
        case RxOutcome::BelowSensitivity: return "below-sensitivity";
    }
    return "?";
}

double frame_airtime(std::uint64_t bits, double bitrate) {
    if (!(bitrate > 0.0)) throw std::invalid_argument("bitrate must be positive");
    if (bits == 0) throw std::invalid_argument("frame must carry at least one bit");
    return static_cast<double>(bits) / bitrate;
}

double received_power(double tx_power, double sender_gain, double receiver_gain, double distance,
                      double frequency_hz, double path_loss_exponent) {
    const double d = std::max(distance, 1.0);
    const double lambda = kSpeedOfLight / frequency_hz;
    const double k = lambda / (4.0 * std::numbers::pi);
    const double loss = path_loss_exponent == 2.0 ? d * d : std::pow(d, path_loss_exponent);
    return tx_power * sender_gain * receiver_gain * k * k / loss;
}

double dbm_to_watts(double dbm) noexcept { return std::pow(10.0, dbm / 10.0) * 1e-3; }

double watts_to_dbm(double watts) noexcept { return 10.0 * std::log10(watts * 1e3); }

bool ChannelState::begin_arrival(std::uint64_t key, double start, double end, double power) {
    if (power < sensitivity_) return false;

    bool corrupted = tx_until_ > start;
    for (Ongoing& o : ongoing_) {
        if (o.end > start) {
            o.corrupted = true;
            corrupted = true;
        }
    }
    ongoing_.push_back({key, end, corrupted});
    busy_until_ = std::max(busy_until_, end);

    const double lo = std::max({start, covered_until_, 0.0});
    const double hi = std::min(end, horizon_);
    if (hi > lo) phy_busy_ += hi - lo;
    covered_until_ = std::max(covered_until_, end);
    return true;
}

RxOutcome ChannelState::end_arrival(std::uint64_t key) {
    const auto it = std::find_if(ongoing_.begin(), ongoing_.end(), [key](const Ongoing& o) { return o.key == key; });
    if (it == ongoing_.end()) throw std::logic_error("end_arrival for an untracked frame");
    const bool corrupted = it->corrupted;
    ongoing_.erase(it);
    return corrupted ? RxOutcome::LostCollision : RxOutcome::Delivered;
}

void ChannelState::begin_transmit(double start, double end) {
    for (Ongoing& o : ongoing_) {
        if (o.end > start) o.corrupted = true;
    }
    tx_until_ = std::max(tx_until_, end);
    busy_until_ = std::max(busy_until_, end);
}

ReceptionReport resolve_reception(double sensitivity_w, std::span<const Arrival> arrivals,
                                  std::span<const Interval> own_tx) {
    // (time, phase, index): phase 0 = arrival end, 1 = own transmission start, 2 = arrival start
    std::vector<std::tuple<double, int, std::size_t>> events;
    for (std::size_t i = 0; i < arrivals.size(); ++i) {
        events.emplace_back(arrivals[i].start, 2, i);
        events.emplace_back(arrivals[i].end, 0, i);
    }
    for (std::size_t i = 0; i < own_tx.size(); ++i) events.emplace_back(own_tx[i].start, 1, i);
    std::sort(events.begin(), events.end());

    ChannelState state(sensitivity_w);
    ReceptionReport report;
    report.outcomes.assign(arrivals.size(), RxOutcome::BelowSensitivity);
    std::vector<bool> tracked(arrivals.size(), false);
    for (const auto& [time, phase, i] : events) {
        if (phase == 2) {
            tracked[i] = state.begin_arrival(i, arrivals[i].start, arrivals[i].end, arrivals[i].power);
        } else if (phase == 1) {
            state.begin_transmit(own_tx[i].start, own_tx[i].end);
        } else if (tracked[i]) {
            report.outcomes[i] = state.end_arrival(i);
        }
    }
    report.phy_busy_seconds = state.phy_busy_seconds();
    return report;
}

}  // namespace vanet::phy
