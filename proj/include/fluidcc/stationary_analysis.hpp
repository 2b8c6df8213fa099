#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fluidcc/trajectory.hpp"

namespace fluidcc {

enum class ExtremumKind { LocalMax, LocalMin, Plateau };

const char* to_string(ExtremumKind k);

// A refined zero of the rate derivative.
struct StationaryPoint {
    double time_t = 0.0;     // seconds
    double rate_x = 0.0;     // packets/s at the refined time
    ExtremumKind kind = ExtremumKind::Plateau;
    double residual = 0.0;   // |rhs| at the refined point, packets/s^2
    double loss_p = 0.0;     // loss probability at rate_x
    double eq7_gap = 0.0;    // |rate_x - sqrt(2(1-p_d)/p_d)/T|, p_d at the delayed rate
};

// Bracketing sample indices [lo, hi] around one refined stationary point.
struct IndexWindow {
    std::size_t lo = 0;
    std::size_t hi = 0;
};

// Derivative magnitudes below this count as stationary. Scale-aware:
// proportional to the loss-free derivative magnitude C/T (times 1e-6 * T,
// i.e. 1e-6 * C / T).
double stationarity_tolerance(const ModelParams& params);

// Zeros of the sampled derivative, ordered by time.
//
// Sign changes between consecutive samples are refined by bisection on the
// dense-output right-hand side (to well below step_dt / 1024). Runs of >= 3
// consecutive near-zero samples collapse into one Plateau point at the run
// midpoint. Window endpoints are never reported.
std::vector<StationaryPoint> find_stationary_points(const Trajectory& traj);

// Kind of the stationary point bracketed by `window`, by derivative sign
// pattern, cross-checked against the discrete neighborhood inequality
// (x(t) <= x(t_n) within +-max(3 steps, T/8) for a max; mirrored for a min).
// Disagreement between the two tests yields Plateau.
// Throws WindowTooSmallError with fewer than 3 samples on either side.
ExtremumKind classify_extremum(const Trajectory& traj, const IndexWindow& window);

// Aggregate view of one trajectory's stationary structure.
struct LemmaReport {
    std::vector<StationaryPoint> points;
    int count_local_max = 0;
    int count_local_min = 0;
    int count_plateau = 0;
    double rate_global_max = 0.0;  // over all samples
    double rate_global_min = 0.0;
    double band_max = 0.0;  // extrema of the rates attained at stationary
    double band_min = 0.0;  // points (the oscillation band); global when none
    int pos_to_neg_crossings = 0;  // strict +/- derivative sign changes
    // True when the trajectory shows exactly one LocalMax and the derivative
    // never again swings from positive to negative after it.
    bool single_local_max = false;
};

LemmaReport lemma_report(const Trajectory& traj);

}  // namespace fluidcc
