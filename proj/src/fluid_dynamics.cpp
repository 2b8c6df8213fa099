#include "fluidcc/fluid_dynamics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "fluidcc/errors.hpp"

namespace fluidcc {

long ModelParams::delay_steps() const {
    return std::lround(rtt_T / step_dt);
}

long ModelParams::grid_steps() const {
    return std::lround(horizon / step_dt);
}

void ModelParams::validate() const {
    loss.validate();
    if (!(rtt_T > 0.0))
        throw ConfigError("params: rtt_T must be > 0");
    if (!(step_dt > 0.0))
        throw ConfigError("params: step_dt must be > 0");
    if (!(horizon > step_dt))
        throw ConfigError("params: horizon must exceed step_dt");
    const long k = delay_steps();
    if (k < 4 || std::abs(rtt_T - static_cast<double>(k) * step_dt) > 1e-9 * rtt_T)
        throw ConfigError("params: step_dt must divide rtt_T exactly with rtt_T/step_dt >= 4");
    if (!(initial_rate_x0 > 0.0) || initial_rate_x0 > loss.capacity_C)
        throw ConfigError("params: initial_rate_x0 must lie in (0, capacity_C]");
    if (static_cast<double>(horizon / step_dt) > 1e8)
        throw ConfigError("params: horizon/step_dt exceeds 1e8 grid points");
}

double rate_rhs(const LossModel& loss, double rtt_T, double x_now, double x_delayed) {
    const double p = loss_probability(loss, x_delayed < 0.0 ? 0.0 : x_delayed);
    return (1.0 - p) / (rtt_T * rtt_T) - x_delayed * p * x_now / 2.0;
}

double window_derivative(const ModelParams& params, double w_now, double x_delayed) {
    if (w_now < 0.0 || x_delayed < 0.0)
        throw std::domain_error("window_derivative: negative input");
    const double p = loss_probability(params.loss, x_delayed);
    return (1.0 - p) / params.rtt_T - x_delayed * p * w_now / 2.0;
}

double rate_derivative(const ModelParams& params, double x_now, double x_delayed) {
    if (x_now < 0.0 || x_delayed < 0.0)
        throw std::domain_error("rate_derivative: negative input");
    return rate_rhs(params.loss, params.rtt_T, x_now, x_delayed);
}

namespace {

// g(x) = x - sqrt(2 (1 - p(x)) / p(x)) / T; negative below the balance point.
double balance_gap(const LossModel& loss, double rtt_T, double x) {
    const double p = loss_probability(loss, x);
    if (p <= 0.0)
        return -std::numeric_limits<double>::infinity();
    return x - std::sqrt(2.0 * (1.0 - p) / p) / rtt_T;
}

}  // namespace

double equilibrium_rate(const LossModel& loss, double rtt_T) {
    loss.validate();
    if (!(rtt_T > 0.0))
        throw ConfigError("equilibrium_rate: rtt_T must be > 0");

    const double C = loss.capacity_C;
    constexpr int kScanPoints = 1 << 16;

    // Scan up from the smallest lossy rate until g changes sign.
    double lo = 0.0, hi = 0.0;
    bool have_neg = false, bracketed = false;
    for (int i = 1; i <= kScanPoints; ++i) {
        const double x = C * static_cast<double>(i) / kScanPoints;
        const double g = balance_gap(loss, rtt_T, x);
        if (g < 0.0) {
            have_neg = true;
            lo = x;
        } else if (have_neg) {
            hi = x;
            bracketed = true;
            break;
        } else {
            // g >= 0 before any negative sample: root sits at or below the
            // rate floor, outside (0, C].
            break;
        }
    }
    if (!bracketed)
        throw NoEquilibriumError("equilibrium_rate: no root of the balance equation in (0, C]");

    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (balance_gap(loss, rtt_T, mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    const double x_s = 0.5 * (lo + hi);
    if (std::abs(balance_gap(loss, rtt_T, x_s)) >= 1e-9)
        throw NoEquilibriumError("equilibrium_rate: bisection failed to meet the residual bound");
    return x_s;
}

}  // namespace fluidcc
