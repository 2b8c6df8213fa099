#pragma once

#include <cstddef>
#include <vector>

#include "fluidcc/fluid_dynamics.hpp"

namespace fluidcc {

// Uniformly sampled solution of the delayed rate equation.
//
// Invariants: times[i] = i * step_dt; every rate lies in [0, C];
// derivatives[i] is the equation right-hand side re-evaluated at
// (rates[i], delayed rate at times[i] - T), reproducible from stored data.
// The sample arrays double as the dense output: rate_at() interpolates with
// the cubic Hermite built from (rates, derivatives).
struct Trajectory {
    ModelParams params;
    std::vector<double> times;
    std::vector<double> rates;
    std::vector<double> derivatives;

    std::size_t size() const { return times.size(); }
    double duration() const { return times.empty() ? 0.0 : times.back(); }

    // Dense rate evaluation. Constant pre-history for t <= 0; clamps to the
    // final sample beyond the horizon.
    double rate_at(double t) const;

    // Rate one delay earlier, x(t - T).
    double delayed_rate_at(double t) const { return rate_at(t - params.rtt_T); }

    // Equation right-hand side on the dense output,
    // F(rate_at(t), delayed_rate_at(t)); coincides with derivatives[i] at nodes.
    double rhs_at(double t) const;
};

}  // namespace fluidcc
