#include "fluidcc/dde_integrator.hpp"

#include <algorithm>
#include <cmath>

namespace fluidcc {

namespace {

double hermite_mid(double x0, double d0, double x1, double d1, double h) {
    // Cubic Hermite at theta = 1/2.
    return 0.5 * (x0 + x1) + 0.125 * h * (d0 - d1);
}

}  // namespace

Trajectory integrate(const ModelParams& params) {
    params.validate();

    const double h = params.step_dt;
    const long k = params.delay_steps();
    const long n = params.grid_steps();
    const double C = params.loss.capacity_C;
    const double x0 = params.initial_rate_x0;

    Trajectory traj;
    traj.params = params;
    traj.times.resize(n + 1);
    traj.rates.resize(n + 1);
    traj.derivatives.resize(n + 1);

    auto& r = traj.rates;
    auto& d = traj.derivatives;

    // Delayed rate at grid node i (time t_i - T lands on node i - k).
    auto delayed_node = [&](long i) { return i < k ? x0 : r[i - k]; };
    // Delayed rate at t_i + h/2 - T, between nodes i-k and i-k+1.
    auto delayed_half = [&](long i) {
        const long j = i - k;
        if (j < 0)
            return x0;  // still inside the constant pre-history
        return hermite_mid(r[j], d[j], r[j + 1], d[j + 1], h);
    };

    auto rhs = [&](double x_now, double x_del) {
        return rate_rhs(params.loss, params.rtt_T, x_now, x_del);
    };

    for (long i = 0; i <= n; ++i)
        traj.times[i] = static_cast<double>(i) * h;

    r[0] = x0;
    d[0] = rhs(r[0], delayed_node(0));
    for (long i = 0; i < n; ++i) {
        const double xd0 = delayed_node(i);
        const double xdh = delayed_half(i);
        const double xd1 = delayed_node(i + 1);

        const double k1 = rhs(r[i], xd0);
        const double k2 = rhs(r[i] + 0.5 * h * k1, xdh);
        const double k3 = rhs(r[i] + 0.5 * h * k2, xdh);
        const double k4 = rhs(r[i] + h * k3, xd1);

        double next = r[i] + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        next = std::clamp(next, 0.0, C);
        r[i + 1] = next;
        d[i + 1] = rhs(next, delayed_node(i + 1));
    }
    return traj;
}

}  // namespace fluidcc
