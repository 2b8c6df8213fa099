#pragma once

#include <string>

namespace fluidcc {

enum class QueueModel {
    FiniteQueue,    // small Drop Tail buffer: p(x) = min(1, (x/C)^B)
    InfiniteQueue,  // M/M/1/B blocking probability: p = (1-rho) rho^B / (1 - rho^(B+1))
};

const char* to_string(QueueModel m);
QueueModel queue_model_from_string(const std::string& name);

// Drop Tail loss model of a single bottleneck: service rate capacity_C
// (packets/s) and buffer_B waiting slots.
struct LossModel {
    QueueModel variant = QueueModel::FiniteQueue;
    double capacity_C = 0.0;  // packets per second, > 0
    int buffer_B = 0;         // packets, >= 1 (and <= 1e6 so rho^B stays evaluable)

    // Throws ConfigError naming the violated constraint.
    void validate() const;
};

// Packet-loss probability at offered rate rate_x (packets/s).
//
// Both variants are monotone non-decreasing on [0, C], continuous, and map
// into [0, 1]. Rates above C are legal: FiniteQueue saturates at 1,
// InfiniteQueue keeps the closed form (still in [0, 1] for rho > 1).
// The rho == 1 removable singularity of the InfiniteQueue form is replaced
// by its limit 1/(B+1) when |rho - 1| < 1e-9.
//
// Throws std::domain_error for negative rate_x.
double loss_probability(const LossModel& model, double rate_x);

}  // namespace fluidcc
