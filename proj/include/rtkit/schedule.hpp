#pragma once

#include <cstdint>

namespace rtkit {

// Iteration schedule of the sampling-sparsification loops: delta iterations,
// per-iteration growth alpha with alpha^delta = n^exponent. alpha is kept in
// log form since it is irrational; sample probabilities clamp to 1 for tiny n.
struct Schedule {
    std::uint32_t n = 0;
    std::uint32_t delta = 0;
    double log_alpha = 0.0;

    double alpha() const;
    // alpha^i / n, clamped to [0, 1].
    double sample_prob(std::uint32_t i) const;
};

// exponent is 1/2 for the spanner and 1/k for the emulator. Requires n >= 2.
Schedule make_schedule(std::uint32_t n, double exponent);

} // namespace rtkit
