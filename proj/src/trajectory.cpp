#include "fluidcc/trajectory.hpp"

#include <algorithm>
#include <cmath>

namespace fluidcc {

double Trajectory::rate_at(double t) const {
    if (t <= 0.0 || rates.empty())
        return params.initial_rate_x0;
    const std::size_t n = rates.size();
    if (t >= times.back())
        return rates.back();

    const double h = params.step_dt;
    auto j = static_cast<std::size_t>(t / h);
    if (j > n - 2)
        j = n - 2;
    const double theta = (t - static_cast<double>(j) * h) / h;

    const double h00 = (1.0 + 2.0 * theta) * (1.0 - theta) * (1.0 - theta);
    const double h10 = theta * (1.0 - theta) * (1.0 - theta);
    const double h01 = theta * theta * (3.0 - 2.0 * theta);
    const double h11 = theta * theta * (theta - 1.0);
    return h00 * rates[j] + h10 * h * derivatives[j] +
           h01 * rates[j + 1] + h11 * h * derivatives[j + 1];
}

double Trajectory::rhs_at(double t) const {
    return rate_rhs(params.loss, params.rtt_T, rate_at(t), delayed_rate_at(t));
}

}  // namespace fluidcc
