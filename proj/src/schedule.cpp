#include "rtkit/schedule.hpp"

#include <cmath>
#include <stdexcept>

namespace rtkit {

double Schedule::alpha() const { return std::exp(log_alpha); }

double Schedule::sample_prob(std::uint32_t i) const {
    const double p = std::exp(i * log_alpha - std::log(static_cast<double>(n)));
    return p > 1.0 ? 1.0 : p;
}

Schedule make_schedule(std::uint32_t n, double exponent) {
    if (n < 2) throw std::invalid_argument("schedule needs n >= 2");
    if (exponent <= 0.0 || exponent > 1.0) throw std::invalid_argument("bad schedule exponent");
    const double target_log = exponent * std::log(static_cast<double>(n)); // log(n^exponent)
    const double delta_real = target_log / std::log(1.5);
    auto delta = static_cast<std::uint32_t>(std::ceil(delta_real - 1e-12));
    if (delta == 0) delta = 1;
    Schedule s;
    s.n = n;
    s.delta = delta;
    s.log_alpha = target_log / delta;
    return s;
}

} // namespace rtkit
