#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <stdexcept>

#include "vanet/metrics/ledger.hpp"
#include "vanet/phy/channel.hpp"
#include "vanet/sim/rng.hpp"

namespace vanet::fuzzy {
class Fis;
}

namespace vanet::mac {

enum class Mode : std::uint8_t { Baseline, Fuzzy };

const char* to_string(Mode mode) noexcept;

struct MacConfig {
    std::uint32_t cw_min = 15;
    std::uint32_t cw_max = 1023;
    double slot_time = 13e-6;  // s
    double aifs = 58e-6;       // s
    bool double_cw_on_collision = true;
    Mode mode = Mode::Baseline;
    std::size_t acceptance = 0;  // output-term rank the gate must reach

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;
};

/// Inputs the gate sees: own speed, own gain, nearest neighbor's gain.
struct VehicleStatus {
    double speed = 0.0;
    double sender_gain = 0.0;
    double receiver_gain = 0.0;
};

enum class SubmitResult : std::uint8_t { Enqueued, DroppedByGate };
enum class AccessDecision : std::uint8_t { TransmitNow, EnterBackoff };
enum class SlotResult : std::uint8_t { Countdown, Frozen, ReadyToTransmit };
enum class TxOutcome : std::uint8_t { Success, Collision };

/// Where the head-of-line frame is in the access procedure.
enum class Phase : std::uint8_t { Idle, Sensing, Backoff, Ready, Transmitting };

const char* to_string(Phase phase) noexcept;

class MacError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Single-queue CSMA/CA with an optional fuzzy admission gate in front.
///
/// Access procedure for the head-of-line frame: if the channel has been idle
/// for at least one AIFS, the node senses for one more AIFS and transmits when
/// the channel stayed idle (confirm_aifs); otherwise it draws a backoff and
/// counts down on idle slots, freezing on busy ones.
///
/// The ledger and random stream are borrowed and must outlive the Mac.
class Mac {
public:
    Mac(MacConfig config, metrics::MetricsLedger& ledger, sim::RandomStream& backoff_rng,
        const fuzzy::Fis* gate = nullptr);

    const MacConfig& config() const noexcept { return cfg_; }

    /// Runs the gate in Fuzzy mode, then queues the frame.
    SubmitResult submit_frame(const phy::Frame& frame, const VehicleStatus& status);

    bool has_pending() const noexcept { return !queue_.empty(); }
    std::size_t queue_size() const noexcept { return queue_.size(); }
    const phy::Frame& head() const;

    /// Starts access for the head frame. `idle_since` is when the channel last
    /// stopped being busy (it is busy when idle_since > now). TransmitNow moves
    /// to Sensing until now + aifs; EnterBackoff draws a fresh backoff.
    AccessDecision channel_access(double now, double idle_since);

    /// End of the sensing window: TransmitNow (Ready) if the channel stayed idle
    /// since sensing began, otherwise EnterBackoff.
    AccessDecision confirm_aifs(double idle_since);
    double sensing_deadline() const noexcept { return sensing_deadline_; }

    /// Uniform draw on [0, cw]; records it and arms the countdown.
    std::uint32_t draw_backoff();
    void start_backoff(std::uint32_t slots);

    /// One slot of countdown. `idle` means the whole slot was idle and preceded
    /// by a full AIFS of idle channel.
    SlotResult advance_slot(bool idle);

    /// Pops the head frame for transmission; counts it as sent.
    phy::Frame start_transmission();

    /// Updates the contention window after a transmission completes.
    std::uint32_t report_tx_outcome(TxOutcome outcome);

    std::uint32_t cw() const noexcept { return cw_; }
    std::optional<std::uint32_t> backoff_remaining() const noexcept { return remaining_; }
    Phase phase() const noexcept { return phase_; }

private:
    MacConfig cfg_;
    metrics::MetricsLedger* ledger_;
    sim::RandomStream* rng_;
    const fuzzy::Fis* gate_;
    std::deque<phy::Frame> queue_;
    std::uint32_t cw_;
    std::optional<std::uint32_t> remaining_;
    Phase phase_ = Phase::Idle;
    double sensing_start_ = 0.0;
    double sensing_deadline_ = 0.0;
};

}  // namespace vanet::mac
