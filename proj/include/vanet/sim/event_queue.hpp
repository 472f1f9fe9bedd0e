#pragma once

#include <cstdint>
#include <queue>
#include <stdexcept>
#include <vector>

namespace vanet::sim {

enum class EventKind : std::uint8_t {
    MobilityTick,
    BeaconDue,
    WsaDue,
    AccidentStart,
    AccidentEnd,
    SlotTick,
    AifsDone,
    FrameStart,
    FrameEnd,
};

const char* to_string(EventKind kind) noexcept;

struct SimEvent {
    double time = 0.0;
    std::uint64_t seq = 0;
    EventKind kind = EventKind::MobilityTick;
    std::uint32_t node = 0;
    std::uint64_t ref = 0;  // frame id, slot index or accident index
};

class PastEvent : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Min-queue on (time, seq). The clock is the time of the last popped event.
class EventQueue {
public:
    /// Throws PastEvent when `time` precedes the clock. Returns the sequence number.
    std::uint64_t schedule(double time, EventKind kind, std::uint32_t node = 0, std::uint64_t ref = 0);

    bool empty() const noexcept { return heap_.empty(); }
    std::size_t size() const noexcept { return heap_.size(); }
    const SimEvent& top() const { return heap_.top(); }
    SimEvent pop();

    double now() const noexcept { return now_; }

private:
    struct Later {
        bool operator()(const SimEvent& a, const SimEvent& b) const noexcept {
            return a.time != b.time ? a.time > b.time : a.seq > b.seq;
        }
    };

    std::priority_queue<SimEvent, std::vector<SimEvent>, Later> heap_;
    std::uint64_t next_seq_ = 0;
    double now_ = 0.0;
};

}  // namespace vanet::sim
