#include "fluidcc/packet_sim.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <queue>
#include <set>

#include "fluidcc/errors.hpp"

namespace fluidcc {

const char* to_string(TcpPhase p) {
    switch (p) {
        case TcpPhase::SlowStart: return "slow_start";
        case TcpPhase::CongestionAvoidance: return "congestion_avoidance";
        case TcpPhase::FastRecovery: return "fast_recovery";
    }
    return "?";
}

void PacketSimConfig::validate() const {
    if (!(capacity_C > 0.0))
        throw ConfigError("packet sim: capacity_C must be > 0");
    if (buffer_B < 1)
        throw ConfigError("packet sim: buffer_B must be >= 1");
    if (!(base_rtt > 0.0))
        throw ConfigError("packet sim: base_rtt must be > 0");
    if (!(duration > base_rtt))
        throw ConfigError("packet sim: duration must exceed base_rtt");
    if (!(init_cwnd >= 1.0))
        throw ConfigError("packet sim: init_cwnd must be >= 1");
    if (!(init_ssthresh >= 2.0))
        throw ConfigError("packet sim: init_ssthresh must be >= 2");
}

double PacketSimResult::throughput_over(double t_begin, double t_end) const {
    if (!(t_end > t_begin))
        return 0.0;
    long n = 0;
    for (double t : delivery_times)
        if (t >= t_begin && t <= t_end)
            ++n;
    return static_cast<double>(n) / (t_end - t_begin);
}

namespace {

enum class EventKind { QueueArrival, ServiceDone, AckArrival, Timeout };

struct Event {
    double time;
    std::uint64_t id;  // insertion order; breaks time ties deterministically
    EventKind kind;
    long seq;          // packet/ack sequence, or timer generation for Timeout
};

struct EventLater {
    bool operator()(const Event& a, const Event& b) const {
        if (a.time != b.time)
            return a.time > b.time;
        return a.id > b.id;
    }
};

class RenoSim {
public:
    explicit RenoSim(const PacketSimConfig& cfg)
        : _cfg(cfg),
          _service_time(1.0 / cfg.capacity_C),
          _one_way(cfg.base_rtt / 2.0),
          _rto(std::max(2.0 * cfg.base_rtt, 1.0)),
          _cwnd(cfg.init_cwnd),
          _ssthresh(cfg.init_ssthresh) {}

    PacketSimResult run();

private:
    void push_event(double t, EventKind kind, long seq) {
        _events.push(Event{t, _next_event_id++, kind, seq});
    }

    TcpPhase phase() const {
        if (_in_fast_recovery)
            return TcpPhase::FastRecovery;
        return _cwnd < _ssthresh ? TcpPhase::SlowStart : TcpPhase::CongestionAvoidance;
    }

    void note_phase(double t) {
        const TcpPhase ph = phase();
        if (_result.phase_trace.empty() || _result.phase_trace.back().second != ph)
            _result.phase_trace.emplace_back(t, ph);
    }

    void note_cwnd(double t) { _result.cwnd_trace.emplace_back(t, _cwnd); }
    void note_queue(double t) {
        _result.queue_trace.emplace_back(t, static_cast<int>(_queue.size()));
    }

    long outstanding() const { return _next_seq - 1 - _highest_acked; }

    void transmit(double t, long seq) {
        ++_result.sent;
        push_event(t + _one_way, EventKind::QueueArrival, seq);
    }

    void arm_timer(double t) {
        ++_timer_generation;
        push_event(t + _rto, EventKind::Timeout, _timer_generation);
    }

    void disarm_timer() { ++_timer_generation; }

    // Send new segments while the window allows; cwnd-clocked, not paced.
    void pump(double t) {
        while (outstanding() < static_cast<long>(_cwnd)) {
            if (outstanding() == 0)
                arm_timer(t);
            transmit(t, _next_seq++);
        }
    }

    void on_queue_arrival(double t, long seq);
    void on_service_done(double t, long seq);
    void on_ack(double t, long ackno);
    void on_timeout(double t, long generation);

    const PacketSimConfig _cfg;
    const double _service_time;
    const double _one_way;
    const double _rto;

    // sender
    double _cwnd;
    double _ssthresh;
    long _next_seq = 1;
    long _highest_acked = 0;
    int _dupacks = 0;
    bool _in_fast_recovery = false;
    long _timer_generation = 0;

    // receiver
    long _rcv_expected = 1;
    std::set<long> _rcv_out_of_order;

    // bottleneck
    std::deque<long> _queue;
    bool _server_busy = false;

    std::priority_queue<Event, std::vector<Event>, EventLater> _events;
    std::uint64_t _next_event_id = 0;
    PacketSimResult _result;
};

void RenoSim::on_queue_arrival(double t, long seq) {
    if (!_server_busy) {
        _server_busy = true;
        push_event(t + _service_time, EventKind::ServiceDone, seq);
        return;
    }
    if (static_cast<int>(_queue.size()) >= _cfg.buffer_B) {
        ++_result.drops;  // Drop Tail
        note_queue(t);
        return;
    }
    _queue.push_back(seq);
    note_queue(t);
}

void RenoSim::on_service_done(double t, long seq) {
    ++_result.delivered;
    _result.delivery_times.push_back(t);
    if (!_queue.empty()) {
        const long next = _queue.front();
        _queue.pop_front();
        note_queue(t);
        push_event(t + _service_time, EventKind::ServiceDone, next);
    } else {
        _server_busy = false;
    }

    // Receiver: cumulative ACK per delivered segment, no delayed ACKs.
    if (seq == _rcv_expected) {
        ++_rcv_expected;
        while (_rcv_out_of_order.erase(_rcv_expected))
            ++_rcv_expected;
    } else if (seq > _rcv_expected) {
        _rcv_out_of_order.insert(seq);
    }
    push_event(t + _one_way, EventKind::AckArrival, _rcv_expected - 1);
}

void RenoSim::on_ack(double t, long ackno) {
    if (ackno > _highest_acked) {
        _highest_acked = ackno;
        _dupacks = 0;
        if (_in_fast_recovery) {
            _cwnd = _ssthresh;  // deflate
            _in_fast_recovery = false;
        } else if (_cwnd < _ssthresh) {
            _cwnd += 1.0;
        } else {
            _cwnd += 1.0 / _cwnd;
        }
        if (outstanding() > 0)
            arm_timer(t);
        else
            disarm_timer();
        note_cwnd(t);
        note_phase(t);
        pump(t);
        return;
    }

    if (outstanding() == 0)
        return;  // stray ACK below the window
    ++_dupacks;
    if (_in_fast_recovery) {
        _cwnd += 1.0;  // inflate per extra duplicate
        note_cwnd(t);
        pump(t);
    } else if (_dupacks == 3) {
        _ssthresh = std::max(_cwnd / 2.0, 2.0);
        _cwnd = _ssthresh + 3.0;
        _in_fast_recovery = true;
        ++_result.fast_retransmits;
        transmit(t, _highest_acked + 1);
        arm_timer(t);
        note_cwnd(t);
        note_phase(t);
    }
}

void RenoSim::on_timeout(double t, long generation) {
    if (generation != _timer_generation)
        return;  // superseded timer
    if (outstanding() == 0)
        return;
    _ssthresh = std::max(_cwnd / 2.0, 2.0);
    _cwnd = 1.0;
    _dupacks = 0;
    _in_fast_recovery = false;
    ++_result.timeouts;
    transmit(t, _highest_acked + 1);
    arm_timer(t);
    note_cwnd(t);
    note_phase(t);
}

PacketSimResult RenoSim::run() {
    note_cwnd(0.0);
    note_phase(0.0);
    note_queue(0.0);
    pump(0.0);

    while (!_events.empty()) {
        const Event ev = _events.top();
        _events.pop();
        if (ev.time > _cfg.duration)
            break;
        switch (ev.kind) {
            case EventKind::QueueArrival: on_queue_arrival(ev.time, ev.seq); break;
            case EventKind::ServiceDone: on_service_done(ev.time, ev.seq); break;
            case EventKind::AckArrival: on_ack(ev.time, ev.seq); break;
            case EventKind::Timeout: on_timeout(ev.time, ev.seq); break;
        }
    }

    _result.in_flight_end = _result.sent - _result.delivered - _result.drops;
    _result.achieved_throughput =
        static_cast<double>(_result.delivered) / _cfg.duration;
    return _result;
}

}  // namespace

PacketSimResult run_packet_sim(const PacketSimConfig& config) {
    config.validate();
    return RenoSim(config).run();
}

int count_sawtooth_peaks(const PacketSimResult& result) {
    // Recovery episodes entered from congestion avoidance; each one cuts the
    // cwnd ramp at a local maximum.
    int peaks = 0;
    for (std::size_t i = 1; i < result.phase_trace.size(); ++i) {
        const auto prev = result.phase_trace[i - 1].second;
        const auto cur = result.phase_trace[i].second;
        if (prev == TcpPhase::CongestionAvoidance &&
            (cur == TcpPhase::FastRecovery || cur == TcpPhase::SlowStart))
            ++peaks;
    }
    return peaks;
}

}  // namespace fluidcc
