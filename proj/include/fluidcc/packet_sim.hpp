#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fluidcc {

enum class TcpPhase { SlowStart, CongestionAvoidance, FastRecovery };

const char* to_string(TcpPhase p);

// One TCP Reno flow through a single Drop Tail bottleneck.
// The sender-side propagation is base_rtt/2 each way; the receiver-side link
// is infinitely fast. Service rate is capacity_C packets/s; the queue holds
// at most buffer_B waiting packets, arrivals beyond that are dropped.
struct PacketSimConfig {
    double capacity_C = 10.0;    // packets per second, > 0
    int buffer_B = 10;           // packets, >= 1
    double base_rtt = 0.5;       // seconds, two-way propagation excluding queueing
    double duration = 60.0;      // seconds, > base_rtt
    double init_cwnd = 1.0;      // packets
    double init_ssthresh = 64.0; // packets
    std::uint64_t seed = 0;      // reserved; the simulator is deterministic

    void validate() const;  // throws ConfigError
};

struct PacketSimResult {
    std::vector<std::pair<double, double>> cwnd_trace;   // (time, packets)
    std::vector<std::pair<double, int>> queue_trace;     // (time, waiting packets)
    std::vector<std::pair<double, TcpPhase>> phase_trace;
    std::vector<double> delivery_times;                  // service completions
    long sent = 0;       // transmissions, retransmits included
    long delivered = 0;
    long drops = 0;
    long in_flight_end = 0;
    long timeouts = 0;
    long fast_retransmits = 0;
    double achieved_throughput = 0.0;  // delivered / duration, packets/s

    // Mean delivery rate over [t_begin, t_end].
    double throughput_over(double t_begin, double t_end) const;
};

// Deterministic event-driven run. Sender follows RFC 2581 Reno semantics:
// slow start (+1 per new ACK below ssthresh), congestion avoidance (+1/cwnd),
// fast retransmit on 3 duplicate ACKs with fast recovery (cwnd = ssthresh+3,
// +1 per extra dup ACK, deflate to ssthresh on a new ACK), and a fixed
// retransmission timeout of max(2 * base_rtt, 1 s) that resets cwnd to 1.
PacketSimResult run_packet_sim(const PacketSimConfig& config);

// Number of cwnd sawtooth peaks: loss-recovery episodes entered from
// congestion avoidance (each cuts a cwnd local maximum).
int count_sawtooth_peaks(const PacketSimResult& result);

}  // namespace fluidcc
