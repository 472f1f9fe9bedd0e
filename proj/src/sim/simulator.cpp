#include "vanet/sim/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace vanet::sim {

using metrics::Metric;
using model::NodeKind;
using phy::FrameKind;

struct Simulator::Node {
    Node(std::uint32_t id_, NodeKind kind_, double sensitivity, double expiry, double slot)
        : id(id_), kind(kind_), channel(sensitivity), neighbors(expiry), busy(slot) {}

    std::uint32_t id;
    NodeKind kind;
    metrics::MetricsLedger ledger;
    phy::ChannelState channel;
    std::unique_ptr<mac::Mac> mac;
    model::NeighborTable neighbors;
    model::OriginLog origins;
    metrics::IntervalUnion busy;  // frozen MAC slots and PHY receptions
    double gain = 1.0;
    double beacon_phase = 0.0;
    double wsa_phase = 0.0;
    double backoff_since = 0.0;
    RandomStream* gains = nullptr;
    RandomStream* traffic = nullptr;
};

namespace {

std::size_t kind_index(FrameKind k) { return static_cast<std::size_t>(k); }

Metric received_metric(FrameKind k) {
    switch (k) {
        case FrameKind::Wsm: return Metric::ReceivedWsm;
        case FrameKind::Bsm: return Metric::ReceivedBsm;
        default: return Metric::ReceivedWsa;
    }
}

Metric generated_metric(FrameKind k) {
    switch (k) {
        case FrameKind::Wsm: return Metric::GeneratedWsm;
        case FrameKind::Bsm: return Metric::GeneratedBsm;
        default: return Metric::GeneratedWsa;
    }
}

}  // namespace

Simulator::Simulator(const model::Scenario& scenario, std::shared_ptr<const fuzzy::Fis> gate, std::ostream* trace)
    : streams_(scenario.seed),
      world_(model::build_scenario(scenario, streams_)),
      mobility_(world_, streams_),
      gate_(std::move(gate)),
      trace_(trace) {
    const model::Scenario& s = world_.scenario;
    if (s.mode == mac::Mode::Fuzzy && !gate_) gate_ = std::make_shared<fuzzy::Fis>(fuzzy::default_gate_definition());

    mac::MacConfig vehicle_mac = s.mac_config();
    if (s.mode == mac::Mode::Fuzzy) vehicle_mac.acceptance = gate_->output_rank(model::output_label(s.acceptance));
    mac::MacConfig rsu_mac = s.mac_config();
    rsu_mac.mode = mac::Mode::Baseline;

    const double sensitivity = phy::dbm_to_watts(s.sensitivity_dbm);
    for (const model::NodeSpec& spec : world_.nodes) {
        auto n = std::make_unique<Node>(spec.id, spec.kind, sensitivity, s.neighbor_expiry, s.slot_time);
        const bool vehicle = spec.kind == NodeKind::Vehicle;
        n->mac = std::make_unique<mac::Mac>(vehicle ? vehicle_mac : rsu_mac, n->ledger,
                                            streams_.stream("backoff", spec.id),
                                            vehicle && s.mode == mac::Mode::Fuzzy ? gate_.get() : nullptr);
        n->channel.set_horizon(s.duration);
        if (vehicle) {
            n->gains = &streams_.stream("gains", spec.id);
            n->traffic = &streams_.stream("traffic", spec.id);
            n->gain = model::sample_gain(*n->gains, s.gain_alpha, s.gain_beta);
            n->beacon_phase = n->traffic->uniform(0.0, s.beacon_interval);
            n->wsa_phase = n->traffic->uniform(0.0, s.beacon_interval);
        } else {
            n->gain = s.rsu_gain;
        }
        nodes_.push_back(std::move(n));
    }

    queue_.schedule(0.0, EventKind::MobilityTick, 0, 0);
    const std::uint64_t periods = model::periodic_count(s.duration, s.beacon_interval);
    for (const auto& n : nodes_) {
        if (n->kind != NodeKind::Vehicle || periods == 0) continue;
        queue_.schedule(n->beacon_phase, EventKind::BeaconDue, n->id, 0);
        if (s.p_wsa > 0.0) queue_.schedule(n->wsa_phase, EventKind::WsaDue, n->id, 0);
    }
    for (std::size_t i = 0; i < world_.accidents.size(); ++i) {
        queue_.schedule(world_.accidents[i].time, EventKind::AccidentStart, world_.accidents[i].vehicle, i);
    }
}

Simulator::~Simulator() = default;

const metrics::MetricsLedger& Simulator::ledger(std::uint32_t id) const { return nodes_.at(id)->ledger; }

const mac::Mac& Simulator::mac(std::uint32_t id) const { return *nodes_.at(id)->mac; }

mac::VehicleStatus Simulator::status_of(std::uint32_t id) const {
    const Node& n = *nodes_.at(id);
    const double t = queue_.now();
    const auto rg = n.neighbors.nearest_gain(t, mobility_.position(id, t));
    return {mobility_.speed(id, t), n.gain, rg.value_or(world_.scenario.rg_fallback)};
}

std::uint32_t Simulator::max_rebroadcasts_per_origin() const {
    std::uint32_t m = 0;
    for (const auto& [key, count] : rebroadcast_counts_) m = std::max(m, count);
    return m;
}

void Simulator::run_until(double t_end) {
    if (finished_) throw std::logic_error("run_until may be called only once");
    t_end_ = std::min(t_end, world_.scenario.duration);
    for (auto& n : nodes_) {
        n->channel.set_horizon(std::max(t_end_, 0.0));
        n->busy.set_upper(std::max(t_end_, 0.0));
    }
    while (!queue_.empty() && queue_.top().time < t_end) {
        const SimEvent e = queue_.pop();
        ++totals_.events;
        if (trace_) {
            char line[96];
            std::snprintf(line, sizeof line, "%.9f %s %u %llu\n", e.time, to_string(e.kind), e.node,
                          static_cast<unsigned long long>(e.ref));
            *trace_ << line;
        }
        dispatch(e);
    }
    for (auto& n : nodes_) {
        n->ledger.record(Metric::PhyBusySeconds, n->channel.phy_busy_seconds());
        n->ledger.freeze();
    }
    finished_ = true;
}

void Simulator::dispatch(const SimEvent& e) {
    const model::Scenario& s = world_.scenario;
    switch (e.kind) {
        case EventKind::MobilityTick:
            mobility_.step(e.time, s.mobility_tick);
            queue_.schedule(static_cast<double>(e.ref + 1) * s.mobility_tick, EventKind::MobilityTick, 0, e.ref + 1);
            break;
        case EventKind::BeaconDue: on_beacon(e.node, e.ref); break;
        case EventKind::WsaDue: on_wsa(e.node, e.ref); break;
        case EventKind::AccidentStart: on_accident(e.ref); break;
        case EventKind::AccidentEnd: break;
        case EventKind::SlotTick: on_slot(e.ref); break;
        case EventKind::AifsDone: on_aifs(e.node); break;
        case EventKind::FrameStart: break;
        case EventKind::FrameEnd: on_frame_end(e.node, e.ref); break;
    }
}

phy::Frame Simulator::new_message(std::uint32_t id, FrameKind kind, std::int64_t bits) {
    Node& n = *nodes_[id];
    n.ledger.record(generated_metric(kind));
    phy::Frame f;
    f.kind = kind;
    f.bits = static_cast<std::uint32_t>(bits);
    f.sender = id;
    f.origin_id = origins_.size();
    origins_.push_back({id, queue_.now(), kind});
    ++totals_.origins_by_kind[kind_index(kind)];
    n.origins.first_sighting(f.origin_id);
    return f;
}

void Simulator::on_beacon(std::uint32_t id, std::uint64_t k) {
    const model::Scenario& s = world_.scenario;
    Node& n = *nodes_[id];
    n.gain = model::sample_gain(*n.gains, s.gain_alpha, s.gain_beta);
    submit(id, new_message(id, FrameKind::Wsm, s.beacon_bits));
    if (k + 1 < model::periodic_count(s.duration, s.beacon_interval)) {
        queue_.schedule(n.beacon_phase + static_cast<double>(k + 1) * s.beacon_interval, EventKind::BeaconDue, id,
                        k + 1);
    }
}

void Simulator::on_wsa(std::uint32_t id, std::uint64_t k) {
    const model::Scenario& s = world_.scenario;
    Node& n = *nodes_[id];
    if (n.traffic->bernoulli(s.p_wsa)) submit(id, new_message(id, FrameKind::WsaRequest, s.wsa_bits));
    if (k + 1 < model::periodic_count(s.duration, s.beacon_interval)) {
        queue_.schedule(n.wsa_phase + static_cast<double>(k + 1) * s.beacon_interval, EventKind::WsaDue, id, k + 1);
    }
}

void Simulator::on_accident(std::uint64_t index) {
    const model::Scenario& s = world_.scenario;
    const model::AccidentEvent& a = world_.accidents.at(index);
    const double now = queue_.now();
    mobility_.halt(a.vehicle, now, now + s.accident_halt);
    queue_.schedule(now + s.accident_halt, EventKind::AccidentEnd, a.vehicle, index);
    submit(a.vehicle, new_message(a.vehicle, FrameKind::Bsm, s.data_bits));
}

void Simulator::submit(std::uint32_t id, const phy::Frame& frame) {
    Node& n = *nodes_[id];
    if (n.mac->submit_frame(frame, status_of(id)) == mac::SubmitResult::Enqueued && n.mac->phase() == mac::Phase::Idle) {
        start_access(id);
    }
}

void Simulator::rebroadcast(std::uint32_t id, const phy::Frame& frame) {
    phy::Frame f = frame;
    f.sender = id;
    f.hops = frame.hops + 1;
    ++rebroadcast_counts_[{id, frame.origin_id}];
    ++totals_.rebroadcasts;
    submit(id, f);
}

void Simulator::start_access(std::uint32_t id) {
    Node& n = *nodes_[id];
    const double now = queue_.now();
    if (n.mac->channel_access(now, n.channel.busy_until()) == mac::AccessDecision::TransmitNow) {
        queue_.schedule(n.mac->sensing_deadline(), EventKind::AifsDone, id, 0);
    } else {
        n.backoff_since = now;
        ensure_slot_tick();
    }
}

void Simulator::on_aifs(std::uint32_t id) {
    Node& n = *nodes_[id];
    if (n.mac->confirm_aifs(n.channel.busy_until()) == mac::AccessDecision::TransmitNow) {
        start_transmission(id);
    } else {
        n.backoff_since = queue_.now();
        ensure_slot_tick();
    }
}

void Simulator::ensure_slot_tick() {
    if (slot_tick_pending_) return;
    const double slot = world_.scenario.slot_time;
    const double now = queue_.now();
    auto k = static_cast<std::uint64_t>(std::floor(now / slot)) + 1;
    while (static_cast<double>(k) * slot <= now) ++k;
    queue_.schedule(static_cast<double>(k) * slot, EventKind::SlotTick, 0, k);
    slot_tick_pending_ = true;
}

void Simulator::on_slot(std::uint64_t k) {
    const model::Scenario& s = world_.scenario;
    const double t = static_cast<double>(k) * s.slot_time;
    const double slot_start = static_cast<double>(k - 1) * s.slot_time;
    slot_tick_pending_ = false;

    std::vector<std::uint32_t> ready;
    for (auto& n : nodes_) {
        if (n->mac->phase() != mac::Phase::Backoff || n->backoff_since >= t) continue;
        const bool idle = n->channel.busy_until() + s.aifs <= slot_start;
        const mac::SlotResult r = n->mac->advance_slot(idle);
        if (r == mac::SlotResult::Frozen) {
            n->busy.add(std::max(slot_start, 0.0), t);
        } else if (r == mac::SlotResult::ReadyToTransmit) {
            ready.push_back(n->id);
        }
    }
    for (std::uint32_t id : ready) start_transmission(id);

    const bool waiting = std::any_of(nodes_.begin(), nodes_.end(),
                                     [](const auto& n) { return n->mac->phase() == mac::Phase::Backoff; });
    if (waiting) {
        queue_.schedule(static_cast<double>(k + 1) * s.slot_time, EventKind::SlotTick, 0, k + 1);
        slot_tick_pending_ = true;
    }
}

void Simulator::start_transmission(std::uint32_t id) {
    const model::Scenario& s = world_.scenario;
    Node& n = *nodes_[id];
    const double now = queue_.now();

    phy::Frame f = n.mac->start_transmission();
    f.id = next_frame_id_++;
    f.sender = id;
    f.start = now;
    f.airtime = phy::frame_airtime(f.bits, s.bitrate);
    f.tx_power = s.tx_power;
    f.sender_gain = n.gain;
    const double end = f.end();
    ++totals_.frames_on_air;
    ++totals_.started_by_kind[kind_index(f.kind)];
    if (trace_) {
        char line[128];
        std::snprintf(line, sizeof line, "%.9f FrameStart %u %llu %s origin=%llu\n", now, id,
                      static_cast<unsigned long long>(f.id), phy::to_string(f.kind),
                      static_cast<unsigned long long>(f.origin_id));
        *trace_ << line;
    }

    n.channel.begin_transmit(now, end);
    ActiveFrame af{f, {}, 0};
    const model::Vec2 from = mobility_.position(id, now);
    for (auto& r : nodes_) {
        if (r->id == id) continue;
        const double d = model::distance(from, mobility_.position(r->id, now));
        const double pr = phy::received_power(s.tx_power, f.sender_gain, r->gain, d, s.frequency, s.path_loss_exponent);
        if (r->channel.begin_arrival(f.id, now, end, pr)) {
            r->busy.add(now, end);
            af.receivers.push_back(r->id);
        } else {
            ++af.below;
        }
    }
    queue_.schedule(end, EventKind::FrameEnd, id, f.id);
    on_air_.emplace(f.id, std::move(af));
}

void Simulator::on_frame_end(std::uint32_t sender, std::uint64_t frame_id) {
    const model::Scenario& s = world_.scenario;
    const auto it = on_air_.find(frame_id);
    ActiveFrame af = std::move(it->second);
    on_air_.erase(it);
    const std::size_t kind = kind_index(af.frame.kind);

    bool collided = false;
    for (std::uint32_t rid : af.receivers) {
        Node& r = *nodes_[rid];
        const phy::RxOutcome out = r.channel.end_arrival(frame_id);
        if (out == phy::RxOutcome::LostCollision) {
            collided = true;
            r.ledger.record(Metric::TotalLostPackets);
            ++totals_.receptions[kind][1];
            continue;
        }
        if (s.corruption_probability > 0.0 && streams_.stream("phy").bernoulli(s.corruption_probability)) {
            r.ledger.record(Metric::TotalLostPackets);
            ++totals_.receptions[kind][1];
            ++totals_.corrupted_receptions;
            continue;
        }
        ++totals_.receptions[kind][0];
        handle_reception(rid, af.frame);
    }
    totals_.receptions[kind][2] += af.below;
    ++totals_.completed_by_kind[kind];
    if (collided) ++totals_.collided_transmissions;

    Node& n = *nodes_[sender];
    n.mac->report_tx_outcome(collided ? mac::TxOutcome::Collision : mac::TxOutcome::Success);
    if (n.mac->has_pending() && n.mac->phase() == mac::Phase::Idle) start_access(sender);
}

void Simulator::handle_reception(std::uint32_t id, const phy::Frame& frame) {
    Node& n = *nodes_.at(id);
    const double now = queue_.now();
    n.ledger.record(received_metric(frame.kind));
    n.neighbors.record(frame.sender, now, frame.sender_gain, mobility_.position(frame.sender, now));

    const bool rsu = n.kind == NodeKind::Rsu;
    switch (frame.kind) {
        case FrameKind::Wsm: return;
        case FrameKind::Bsm:
            if (n.origins.first_sighting(frame.origin_id)) rebroadcast(id, frame);
            return;
        case FrameKind::WsaRequest:
            if (!n.origins.first_sighting(frame.origin_id)) return;
            if (rsu) {
                submit(id, new_message(id, FrameKind::WsaResponse, world_.scenario.wsa_bits));
            } else {
                rebroadcast(id, frame);
            }
            return;
        case FrameKind::WsaResponse:
            if (n.origins.first_sighting(frame.origin_id) && !rsu) rebroadcast(id, frame);
            return;
    }
}

metrics::RunResult Simulator::result() const {
    const model::Scenario& s = world_.scenario;
    metrics::RunResult r;
    r.scenario = s.name;
    r.seed = s.seed;
    r.duration = s.duration;
    r.mode = mac::to_string(s.mode);
    r.acceptance = model::to_string(s.acceptance);
    const double end = finished_ ? std::max(t_end_, 0.0) : queue_.now();
    for (const auto& n : nodes_) {
        metrics::NodeResult nr;
        nr.id = n->id;
        nr.kind = model::to_string(n->kind);
        nr.ledger = n->ledger;
        const model::Vec2 p = mobility_.position(n->id, end);
        nr.x = p.x;
        nr.y = p.y;
        nr.idle_seconds = std::max(end - n->busy.measure(), 0.0);
        r.nodes.push_back(std::move(nr));
    }
    r.totals = totals_;
    return r;
}

}  // namespace vanet::sim
