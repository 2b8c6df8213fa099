#include "fluidcc/loss_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fluidcc/errors.hpp"

namespace fluidcc {

const char* to_string(QueueModel m) {
    return m == QueueModel::FiniteQueue ? "finite" : "infinite";
}

QueueModel queue_model_from_string(const std::string& name) {
    if (name == "finite")
        return QueueModel::FiniteQueue;
    if (name == "infinite")
        return QueueModel::InfiniteQueue;
    throw ConfigError("unknown loss model '" + name + "' (expected finite|infinite)");
}

void LossModel::validate() const {
    if (!(capacity_C > 0.0))
        throw ConfigError("loss model: capacity_C must be > 0");
    if (buffer_B < 1)
        throw ConfigError("loss model: buffer_B must be >= 1");
    if (buffer_B > 1000000)
        throw ConfigError("loss model: buffer_B must be <= 1e6");
}

double loss_probability(const LossModel& model, double rate_x) {
    if (rate_x < 0.0)
        throw std::domain_error("loss_probability: rate_x must be >= 0");
    model.validate();

    const double rho = rate_x / model.capacity_C;
    const int b = model.buffer_B;

    if (model.variant == QueueModel::FiniteQueue)
        return std::min(1.0, std::pow(rho, static_cast<double>(b)));

    // M/M/1/B blocking probability.
    if (rho == 0.0)
        return 0.0;
    if (std::abs(rho - 1.0) < 1e-9)
        return 1.0 / (b + 1);
    if (rho < 1.0)
        return (1.0 - rho) * std::pow(rho, static_cast<double>(b)) /
               (1.0 - std::pow(rho, static_cast<double>(b + 1)));
    // rho > 1: same function rewritten in sigma = 1/rho < 1 so no power overflows.
    const double sigma = 1.0 / rho;
    return (1.0 - sigma) / (1.0 - std::pow(sigma, static_cast<double>(b + 1)));
}

}  // namespace fluidcc
