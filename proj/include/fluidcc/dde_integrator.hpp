#pragma once

#include "fluidcc/trajectory.hpp"

namespace fluidcc {

// Integrate the delayed rate equation over [0, horizon] with fixed-step
// classic Runge-Kutta. The delay is grid-aligned (step_dt divides rtt_T), so
// full-step delayed arguments are read straight from history; the half-step
// stage arguments come from the cubic Hermite interpolant of the stored
// samples. Rates are clamped to [0, C] after each full step. Deterministic:
// equal params give bit-identical trajectories.
//
// Throws ConfigError when params are invalid (see ModelParams::validate).
Trajectory integrate(const ModelParams& params);

}  // namespace fluidcc
