#include "vanet/mac/edca.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "vanet/fuzzy/engine.hpp"

namespace vanet::mac {

using metrics::Metric;

const char* to_string(Mode mode) noexcept { return mode == Mode::Fuzzy ? "fuzzy" : "baseline"; }

const char* to_string(Phase phase) noexcept {
    switch (phase) {
        case Phase::Idle: return "idle";
        case Phase::Sensing: return "sensing";
        case Phase::Backoff: return "backoff";
        case Phase::Ready: return "ready";
        case Phase::Transmitting: return "transmitting";
    }
    return "?";
}

void MacConfig::validate() const {
    if (!std::has_single_bit(cw_min + 1)) throw std::invalid_argument("cwMin + 1 must be a power of two");
    if (!std::has_single_bit(cw_max + 1)) throw std::invalid_argument("cwMax + 1 must be a power of two");
    if (cw_min > cw_max) throw std::invalid_argument("cwMin must not exceed cwMax");
    if (!(slot_time > 0.0) || !std::isfinite(slot_time)) throw std::invalid_argument("slotTime must be positive");
    if (!(aifs >= slot_time) || !std::isfinite(aifs)) throw std::invalid_argument("aifs must be at least slotTime");
}

Mac::Mac(MacConfig config, metrics::MetricsLedger& ledger, sim::RandomStream& backoff_rng, const fuzzy::Fis* gate)
    : cfg_(config), ledger_(&ledger), rng_(&backoff_rng), gate_(gate), cw_(config.cw_min) {
    cfg_.validate();
    if (cfg_.mode == Mode::Fuzzy && gate_ == nullptr) throw std::invalid_argument("fuzzy mode needs a gate");
}

SubmitResult Mac::submit_frame(const phy::Frame& frame, const VehicleStatus& status) {
    if (frame.bits == 0) throw MacError("frame without payload");
    if (cfg_.mode == Mode::Fuzzy &&
        gate_->gate(status.speed, status.sender_gain, status.receiver_gain, cfg_.acceptance) ==
            fuzzy::GateVerdict::Defer) {
        ledger_->record(Metric::DroppedByGate);
        return SubmitResult::DroppedByGate;
    }
    queue_.push_back(frame);
    return SubmitResult::Enqueued;
}

const phy::Frame& Mac::head() const {
    if (queue_.empty()) throw MacError("queue is empty");
    return queue_.front();
}

AccessDecision Mac::channel_access(double now, double idle_since) {
    if (queue_.empty()) throw MacError("channel_access with an empty queue");
    if (phase_ != Phase::Idle) throw MacError(std::string("channel_access while ") + to_string(phase_));
    if (idle_since <= now && now - idle_since >= cfg_.aifs) {
        phase_ = Phase::Sensing;
        sensing_start_ = now;
        sensing_deadline_ = now + cfg_.aifs;
        return AccessDecision::TransmitNow;
    }
    ledger_->record(Metric::TimesIntoBackoff);
    draw_backoff();
    return AccessDecision::EnterBackoff;
}

AccessDecision Mac::confirm_aifs(double idle_since) {
    if (phase_ != Phase::Sensing) throw MacError(std::string("confirm_aifs while ") + to_string(phase_));
    if (idle_since <= sensing_start_) {
        phase_ = Phase::Ready;
        return AccessDecision::TransmitNow;
    }
    ledger_->record(Metric::TimesIntoBackoff);
    draw_backoff();
    return AccessDecision::EnterBackoff;
}

std::uint32_t Mac::draw_backoff() {
    const auto slots = static_cast<std::uint32_t>(rng_->uniform_int(0, cw_));
    start_backoff(slots);
    return slots;
}

void Mac::start_backoff(std::uint32_t slots) {
    ledger_->record(Metric::SlotsBackoff, slots);
    remaining_ = slots;
    phase_ = Phase::Backoff;
}

SlotResult Mac::advance_slot(bool idle) {
    if (phase_ != Phase::Backoff || !remaining_) throw MacError("advance_slot outside backoff");
    if (!idle) {
        ledger_->record(Metric::MacBusySeconds, cfg_.slot_time);
        return SlotResult::Frozen;
    }
    if (*remaining_ > 0) {
        --*remaining_;
        return SlotResult::Countdown;
    }
    remaining_.reset();
    phase_ = Phase::Ready;
    return SlotResult::ReadyToTransmit;
}

phy::Frame Mac::start_transmission() {
    if (phase_ != Phase::Ready) throw MacError(std::string("start_transmission while ") + to_string(phase_));
    phy::Frame frame = queue_.front();
    queue_.pop_front();
    ledger_->record(Metric::SentPackets);
    phase_ = Phase::Transmitting;
    return frame;
}

std::uint32_t Mac::report_tx_outcome(TxOutcome outcome) {
    if (outcome == TxOutcome::Success) {
        cw_ = cfg_.cw_min;
    } else if (cfg_.double_cw_on_collision) {
        cw_ = std::min(2 * (cw_ + 1) - 1, cfg_.cw_max);
    }
    if (phase_ == Phase::Transmitting) phase_ = Phase::Idle;
    return cw_;
}

}  // namespace vanet::mac
