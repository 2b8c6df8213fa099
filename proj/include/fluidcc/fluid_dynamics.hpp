#pragma once

#include "fluidcc/loss_model.hpp"

namespace fluidcc {

// Inputs of one fluid-model run. The sending rate x(t) lives in [0, C];
// pre-history on [-T, 0] is the constant initial_rate_x0.
struct ModelParams {
    double rtt_T = 0.5;            // round-trip time, seconds, > 0
    LossModel loss;
    double initial_rate_x0 = 1.0;  // packets/s, in (0, C]
    double horizon = 10.0;         // seconds, > step_dt
    double step_dt = 0.5 / 64.0;   // seconds; must divide rtt_T (k >= 4 steps per delay)

    // Steps per delay interval, i.e. rtt_T / step_dt rounded; validate()
    // guarantees the division is exact.
    long delay_steps() const;
    long grid_steps() const;  // horizon / step_dt rounded

    void validate() const;  // throws ConfigError
};

// Congestion-window growth rate: additive increase of one window per RTT,
// scaled down by the loss feedback of the delayed rate.
//   dw/dt = (1 - p(x_d)) / T  -  x_d p(x_d) w / 2
// Throws std::domain_error for negative inputs.
double window_derivative(const ModelParams& params, double w_now, double x_delayed);

// Sending-rate form of the same dynamics:
//   dx/dt = (1 - p(x_d)) / T^2  -  x_d p(x_d) x / 2
// Throws std::domain_error for negative inputs.
double rate_derivative(const ModelParams& params, double x_now, double x_delayed);

// Unchecked kernel of rate_derivative; used by the integrator on stage
// states that may transiently leave [0, C].
double rate_rhs(const LossModel& loss, double rtt_T, double x_now, double x_delayed);

// Rate at which the dynamics are at rest with current == delayed rate:
// the root of g(x) = x - sqrt(2 (1 - p(x)) / p(x)) / T on (0, C], located by
// a coarse scan followed by bisection. The result satisfies
// |x_s - sqrt(2 (1 - p(x_s)) / p(x_s)) / T| < 1e-9.
// Throws NoEquilibriumError when g has no sign change on (0, C] (the balance
// point falls outside the admissible rate range).
double equilibrium_rate(const LossModel& loss, double rtt_T);

}  // namespace fluidcc
