#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace vanet::phy {

inline constexpr double kSpeedOfLight = 299'792'458.0;  // m/s

enum class FrameKind : std::uint8_t { Wsm, Bsm, WsaRequest, WsaResponse };

const char* to_string(FrameKind kind) noexcept;

/// One over-the-air transmission. `origin_id` identifies the message it
/// carries, shared by every rebroadcast of that message.
struct Frame {
    std::uint64_t id = 0;
    FrameKind kind = FrameKind::Wsm;
    std::uint32_t bits = 0;
    std::uint32_t sender = 0;
    std::uint64_t origin_id = 0;
    std::uint32_t hops = 0;
    double tx_power = 0.0;     // W
    double sender_gain = 0.0;  // [0, 1]
    double start = 0.0;        // s
    double airtime = 0.0;      // s

    double end() const noexcept { return start + airtime; }
};

/// bits / bitrate, no preamble. Throws std::invalid_argument unless both are positive.
double frame_airtime(std::uint64_t bits, double bitrate);

/// Friis free-space with a configurable path-loss exponent:
/// Pr = Pt * sg * rg * (lambda / (4 pi))^2 / d^n, lambda = c / f, d floored at 1 m.
double received_power(double tx_power, double sender_gain, double receiver_gain, double distance,
                      double frequency_hz, double path_loss_exponent = 2.0);

double dbm_to_watts(double dbm) noexcept;
double watts_to_dbm(double watts) noexcept;

enum class RxOutcome : std::uint8_t { Delivered, LostCollision, BelowSensitivity };

const char* to_string(RxOutcome outcome) noexcept;

/// Receiver-side state of one node on the shared channel.
///
/// Arrivals at or above the sensitivity threshold are tracked; two such
/// arrivals whose intervals overlap by any positive amount are both lost (no
/// capture). The node is half-duplex: arrivals overlapping its own
/// transmissions are lost as well. Busy time is the measure of the union of
/// tracked arrival intervals, clipped to [0, horizon].
class ChannelState {
public:
    explicit ChannelState(double sensitivity_w, double horizon = std::numeric_limits<double>::infinity())
        : sensitivity_(sensitivity_w), horizon_(horizon) {}

    /// Registers an arrival. Returns false (and tracks nothing) below sensitivity.
    /// Calls must come in non-decreasing start order.
    bool begin_arrival(std::uint64_t key, double start, double end, double power);

    /// Outcome of a tracked arrival; forgets it.
    RxOutcome end_arrival(std::uint64_t key);

    void begin_transmit(double start, double end);

    /// Carrier sense: latest end over tracked arrivals and own transmissions.
    double busy_until() const noexcept { return busy_until_; }
    bool busy_at(double t) const noexcept { return busy_until_ > t; }
    bool transmitting_at(double t) const noexcept { return tx_until_ > t; }

    double phy_busy_seconds() const noexcept { return phy_busy_; }
    void set_horizon(double horizon) noexcept { horizon_ = horizon; }
    double sensitivity() const noexcept { return sensitivity_; }
    std::size_t tracked() const noexcept { return ongoing_.size(); }

private:
    struct Ongoing {
        std::uint64_t key;
        double end;
        bool corrupted;
    };

    double sensitivity_;
    double horizon_;
    std::vector<Ongoing> ongoing_;
    double tx_until_ = -std::numeric_limits<double>::infinity();
    double busy_until_ = -std::numeric_limits<double>::infinity();
    double covered_until_ = 0.0;
    double phy_busy_ = 0.0;
};

struct Arrival {
    double start = 0.0;
    double end = 0.0;
    double power = 0.0;  // W at this receiver
};

struct Interval {
    double start = 0.0;
    double end = 0.0;
};

struct ReceptionReport {
    std::vector<RxOutcome> outcomes;  // parallel to the arrivals
    double phy_busy_seconds = 0.0;
};

/// Resolves a whole arrival schedule at one receiver by replaying it through a
/// ChannelState in time order (ends before starts at equal times). `own_tx`
/// lists the receiver's own transmissions.
ReceptionReport resolve_reception(double sensitivity_w, std::span<const Arrival> arrivals,
                                  std::span<const Interval> own_tx = {});

}  // namespace vanet::phy
