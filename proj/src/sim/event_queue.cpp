#include "vanet/sim/event_queue.hpp"

#include <cmath>
#include <string>

namespace vanet::sim {

const char* to_string(EventKind kind) noexcept {
    switch (kind) {
        case EventKind::MobilityTick: return "MobilityTick";
        case EventKind::BeaconDue: return "BeaconDue";
        case EventKind::WsaDue: return "WsaDue";
        case EventKind::AccidentStart: return "AccidentStart";
        case EventKind::AccidentEnd: return "AccidentEnd";
        case EventKind::SlotTick: return "SlotTick";
        case EventKind::AifsDone: return "AifsDone";
        case EventKind::FrameStart: return "FrameStart";
        case EventKind::FrameEnd: return "FrameEnd";
    }
    return "?";
}

std::uint64_t EventQueue::schedule(double time, EventKind kind, std::uint32_t node, std::uint64_t ref) {
    if (!(time >= now_) || std::isnan(time)) {
        throw PastEvent(std::string(to_string(kind)) + " scheduled at " + std::to_string(time) + " before clock " +
                        std::to_string(now_));
    }
    heap_.push({time, next_seq_, kind, node, ref});
    return next_seq_++;
}

SimEvent EventQueue::pop() {
    if (heap_.empty()) throw std::logic_error("pop from an empty event queue");
    SimEvent e = heap_.top();
    heap_.pop();
    now_ = e.time;
    return e;
}

}  // namespace vanet::sim
